#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "latticeforge/context.hpp"
#include "latticeforge/wordnet.hpp"

namespace latticeforge {

// An exact percentage value, kept as a rational so threshold comparisons
// never lose precision.
class Percent {
 public:
  Percent() = default;

  static Percent of(long long whole) { return Percent(whole, 1); }
  static Percent ratio(long long num, long long den);
  // Accepts plain decimals such as "2", "2.5" or "0.25".
  static Percent parse(std::string_view text);

  long long num() const { return num_; }
  long long den() const { return den_; }

  // True when 100 * count / axis_size <= this percentage.
  bool admits_removal(std::size_t count, std::size_t axis_size) const;

  // Decimal rendering with trailing zeros trimmed.
  std::string str() const;

  friend bool operator==(const Percent& a, const Percent& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }
  friend bool operator<(const Percent& a, const Percent& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator<=(const Percent& a, const Percent& b) {
    return a == b || a < b;
  }

 private:
  Percent(long long num, long long den) : num_(num), den_(den) {}

  long long num_ = 0;
  long long den_ = 1;
};

// Relative incidence frequencies of one context, as exact percentages.
struct Frequencies {
  // Per object: percentage of attributes it is incident with.
  std::vector<Percent> objects;
  // Per attribute: percentage of objects it is incident with.
  std::vector<Percent> attributes;
  // Raw incidence counts backing the percentages.
  std::vector<std::size_t> object_counts;
  std::vector<std::size_t> attribute_counts;
};

// Throws EmptyAxis when either axis of the context is empty.
Frequencies frequencies(const FormalContext& ctx);

// Replaces the listed labels on one axis by a single merged label whose
// incidence is the cellwise OR of the group. The merged label takes the
// position of the group's first member in axis order; the other members
// disappear. The group must name at least one existing label.
FormalContext merge(const FormalContext& ctx, Axis axis,
                    const std::vector<std::string>& group,
                    const std::string& merged_label);

enum class Technique { wordnet, frequency };

enum class ReductionOrder {
  none,
  wordnet_only,
  frequency_only,
  wordnet_then_frequency,
  frequency_then_wordnet,
};

struct TechniqueConfig {
  ReductionOrder order = ReductionOrder::none;
  int hypernym_depth = 4;
  Percent threshold = Percent::of(2);
};

struct MergeGroup {
  std::string survivor;
  // All merged members including the survivor, in axis order.
  std::vector<std::string> members;
};

struct Removal {
  std::string label;
  std::size_t incidence_count = 0;
  std::size_t axis_size = 0;
};

// What one reduction pass did to the context.
struct ReductionReport {
  Technique technique = Technique::frequency;
  int hypernym_depth = 0;
  Percent threshold;
  std::vector<MergeGroup> merged_objects;
  std::vector<MergeGroup> merged_attributes;
  std::vector<Removal> removed_objects;
  std::vector<Removal> removed_attributes;

  // CSV with header action,axis,survivor,members,frequency.
  std::string csv() const;
  // Human-readable summary.
  std::string text() const;
};

// Removes every object and attribute whose relative frequency is less than
// or equal to the threshold. Frequencies are taken once from the input
// context; both axes are cut in the same step.
std::pair<FormalContext, ReductionReport> frequency_reduce(const FormalContext& ctx,
                                                           Percent threshold);

// Merges lexically related labels: objects are grouped as nouns, then
// attributes as verbs. Each label is compared against the labels after it;
// related ones merge into one row or column under the most general label
// of the group.
std::pair<FormalContext, ReductionReport> wordnet_reduce(
    const FormalContext& ctx, const RelatednessLexicon& lexicon, int depth);

// Runs the passes selected by config.order in sequence. The lexicon may be
// null only for orders that do not use the lexical technique, otherwise
// ConfigError is thrown.
std::pair<FormalContext, std::vector<ReductionReport>> apply_order(
    const FormalContext& ctx, const TechniqueConfig& config,
    const RelatednessLexicon* lexicon);

const char* order_name(ReductionOrder order);
std::optional<ReductionOrder> order_from_name(std::string_view name);

}  // namespace latticeforge
