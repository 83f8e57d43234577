#include "latticeforge/reduce.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace latticeforge {

namespace {

std::string csv_field(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += "\"\"";
    else out.push_back(c);
  }
  out += "\"";
  return out;
}

std::string join(const std::vector<std::string>& items, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

}  // namespace

Percent Percent::ratio(long long num, long long den) {
  if (den <= 0 || num < 0) throw ConfigError("percentage must be non-negative");
  long long g = std::gcd(num, den);
  if (g == 0) g = 1;
  return Percent(num / g, den / g);
}

Percent Percent::parse(std::string_view text) {
  std::string whole, frac;
  bool seen_dot = false;
  for (char c : text) {
    if (c == '.') {
      if (seen_dot) throw ConfigError("bad percentage: " + std::string(text));
      seen_dot = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      (seen_dot ? frac : whole).push_back(c);
    } else {
      throw ConfigError("bad percentage: " + std::string(text));
    }
  }
  if (whole.empty() && frac.empty()) {
    throw ConfigError("bad percentage: " + std::string(text));
  }
  if (frac.size() > 6) throw ConfigError("percentage precision limited to 6 digits");
  long long num = whole.empty() ? 0 : std::stoll(whole);
  long long den = 1;
  for (char c : frac) {
    num = num * 10 + (c - '0');
    den *= 10;
  }
  return ratio(num, den);
}

bool Percent::admits_removal(std::size_t count, std::size_t axis_size) const {
  // 100 * count / axis_size <= num / den, cross-multiplied.
  return static_cast<long long>(count) * 100 * den_ <=
         num_ * static_cast<long long>(axis_size);
}

std::string Percent::str() const {
  long long integral = num_ / den_;
  long long rem = num_ % den_;
  std::string out = std::to_string(integral);
  if (rem == 0) return out;
  std::string frac;
  for (int i = 0; i < 6 && rem != 0; ++i) {
    rem *= 10;
    frac.push_back(static_cast<char>('0' + rem / den_));
    rem %= den_;
  }
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  if (!frac.empty()) out += "." + frac;
  return out;
}

Frequencies frequencies(const FormalContext& ctx) {
  if (ctx.object_count() == 0 || ctx.attribute_count() == 0) {
    throw EmptyAxis("frequencies need both axes non-empty");
  }
  Frequencies freq;
  for (std::size_t i = 0; i < ctx.object_count(); ++i) {
    std::size_t count = ctx.row(i).count();
    freq.object_counts.push_back(count);
    freq.objects.push_back(Percent::ratio(100 * static_cast<long long>(count),
                                          static_cast<long long>(ctx.attribute_count())));
  }
  for (std::size_t j = 0; j < ctx.attribute_count(); ++j) {
    std::size_t count = ctx.column(j).count();
    freq.attribute_counts.push_back(count);
    freq.attributes.push_back(Percent::ratio(100 * static_cast<long long>(count),
                                             static_cast<long long>(ctx.object_count())));
  }
  return freq;
}

namespace {

FormalContext merge_objects(const FormalContext& ctx,
                            const std::vector<std::string>& group,
                            const std::string& merged_label) {
  if (group.empty()) throw Error("merge group must not be empty");
  std::vector<bool> in_group(ctx.object_count(), false);
  std::size_t survivor_pos = ctx.object_count();
  for (const auto& label : group) {
    std::size_t idx = ctx.object_index(label);
    in_group[idx] = true;
    survivor_pos = std::min(survivor_pos, idx);
  }
  Bitset merged_row(ctx.attribute_count());
  for (std::size_t i = 0; i < ctx.object_count(); ++i) {
    if (in_group[i]) merged_row |= ctx.row(i);
  }
  std::vector<std::string> objects;
  std::vector<Bitset> rows;
  for (std::size_t i = 0; i < ctx.object_count(); ++i) {
    if (i == survivor_pos) {
      objects.push_back(merged_label);
      rows.push_back(merged_row);
    } else if (!in_group[i]) {
      objects.push_back(ctx.objects()[i]);
      rows.push_back(ctx.row(i));
    }
  }
  return FormalContext::from_rows(std::move(objects), ctx.attributes(),
                                  std::move(rows));
}

}  // namespace

FormalContext merge(const FormalContext& ctx, Axis axis,
                    const std::vector<std::string>& group,
                    const std::string& merged_label) {
  if (axis == Axis::objects) return merge_objects(ctx, group, merged_label);
  return merge_objects(ctx.transposed(), group, merged_label).transposed();
}

std::pair<FormalContext, ReductionReport> frequency_reduce(const FormalContext& ctx,
                                                           Percent threshold) {
  ReductionReport report;
  report.technique = Technique::frequency;
  report.threshold = threshold;
  if (ctx.object_count() == 0 || ctx.attribute_count() == 0) {
    return {ctx, report};
  }

  Frequencies freq = frequencies(ctx);
  std::vector<bool> keep_obj(ctx.object_count(), true);
  std::vector<bool> keep_attr(ctx.attribute_count(), true);
  for (std::size_t i = 0; i < ctx.object_count(); ++i) {
    if (threshold.admits_removal(freq.object_counts[i], ctx.attribute_count())) {
      keep_obj[i] = false;
      report.removed_objects.push_back(
          {ctx.objects()[i], freq.object_counts[i], ctx.attribute_count()});
    }
  }
  for (std::size_t j = 0; j < ctx.attribute_count(); ++j) {
    if (threshold.admits_removal(freq.attribute_counts[j], ctx.object_count())) {
      keep_attr[j] = false;
      report.removed_attributes.push_back(
          {ctx.attributes()[j], freq.attribute_counts[j], ctx.object_count()});
    }
  }

  std::vector<std::string> objects, attributes;
  std::vector<std::size_t> attr_map;
  for (std::size_t j = 0; j < ctx.attribute_count(); ++j) {
    if (keep_attr[j]) {
      attributes.push_back(ctx.attributes()[j]);
      attr_map.push_back(j);
    }
  }
  std::vector<Bitset> rows;
  for (std::size_t i = 0; i < ctx.object_count(); ++i) {
    if (!keep_obj[i]) continue;
    objects.push_back(ctx.objects()[i]);
    Bitset row(attributes.size());
    for (std::size_t j = 0; j < attr_map.size(); ++j) {
      if (ctx.row(i).test(attr_map[j])) row.set(j);
    }
    rows.push_back(std::move(row));
  }
  return {FormalContext::from_rows(std::move(objects), std::move(attributes),
                                   std::move(rows)),
          report};
}

namespace {

// Scans one axis left to right; each unconsumed label collects the later
// unconsumed labels it is lexically related to, and the group merges under
// its most general member.
void wordnet_reduce_axis(FormalContext& ctx, Axis axis, Pos pos,
                         const RelatednessLexicon& lexicon, int depth,
                         std::vector<MergeGroup>& out) {
  const std::vector<std::string> labels =
      axis == Axis::objects ? ctx.objects() : ctx.attributes();
  std::vector<bool> consumed(labels.size(), false);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (consumed[i]) continue;
    MergeGroup group;
    group.members.push_back(labels[i]);
    std::string survivor = labels[i];
    for (std::size_t j = i + 1; j < labels.size(); ++j) {
      if (consumed[j]) continue;
      auto related = lexicon.most_general_within(labels[i], labels[j], pos, depth);
      if (!related) continue;
      consumed[j] = true;
      group.members.push_back(labels[j]);
      if (auto general = lexicon.most_general_within(survivor, labels[j], pos, depth)) {
        survivor = *general;
      }
    }
    if (group.members.size() < 2) continue;
    group.survivor = survivor;
    ctx = merge(ctx, axis, group.members, survivor);
    out.push_back(std::move(group));
  }
}

}  // namespace

std::pair<FormalContext, ReductionReport> wordnet_reduce(
    const FormalContext& ctx, const RelatednessLexicon& lexicon, int depth) {
  ReductionReport report;
  report.technique = Technique::wordnet;
  report.hypernym_depth = depth;
  FormalContext reduced = ctx;
  wordnet_reduce_axis(reduced, Axis::objects, Pos::noun, lexicon, depth,
                      report.merged_objects);
  wordnet_reduce_axis(reduced, Axis::attributes, Pos::verb, lexicon, depth,
                      report.merged_attributes);
  return {std::move(reduced), report};
}

std::pair<FormalContext, std::vector<ReductionReport>> apply_order(
    const FormalContext& ctx, const TechniqueConfig& config,
    const RelatednessLexicon* lexicon) {
  const bool wants_wordnet = config.order == ReductionOrder::wordnet_only ||
                             config.order == ReductionOrder::wordnet_then_frequency ||
                             config.order == ReductionOrder::frequency_then_wordnet;
  if (wants_wordnet && !lexicon) {
    throw ConfigError("the selected reduction order needs a lexical database");
  }

  std::vector<Technique> passes;
  switch (config.order) {
    case ReductionOrder::none:
      break;
    case ReductionOrder::wordnet_only:
      passes = {Technique::wordnet};
      break;
    case ReductionOrder::frequency_only:
      passes = {Technique::frequency};
      break;
    case ReductionOrder::wordnet_then_frequency:
      passes = {Technique::wordnet, Technique::frequency};
      break;
    case ReductionOrder::frequency_then_wordnet:
      passes = {Technique::frequency, Technique::wordnet};
      break;
  }

  FormalContext current = ctx;
  std::vector<ReductionReport> reports;
  for (Technique pass : passes) {
    if (pass == Technique::wordnet) {
      auto [next, report] = wordnet_reduce(current, *lexicon, config.hypernym_depth);
      current = std::move(next);
      reports.push_back(std::move(report));
    } else {
      auto [next, report] = frequency_reduce(current, config.threshold);
      current = std::move(next);
      reports.push_back(std::move(report));
    }
  }
  return {std::move(current), std::move(reports)};
}

std::string ReductionReport::csv() const {
  std::ostringstream out;
  out << "action,axis,survivor,members,frequency\n";
  auto merge_rows = [&](const std::vector<MergeGroup>& groups, const char* axis) {
    for (const auto& g : groups) {
      out << "merge," << axis << ',' << csv_field(g.survivor) << ','
          << csv_field(join(g.members, "|")) << ",\n";
    }
  };
  auto removal_rows = [&](const std::vector<Removal>& removals, const char* axis) {
    for (const auto& r : removals) {
      Percent pct = Percent::ratio(100 * static_cast<long long>(r.incidence_count),
                                   static_cast<long long>(r.axis_size));
      out << "remove," << axis << ',' << csv_field(r.label) << ",," << pct.str()
          << '\n';
    }
  };
  merge_rows(merged_objects, "objects");
  merge_rows(merged_attributes, "attributes");
  removal_rows(removed_objects, "objects");
  removal_rows(removed_attributes, "attributes");
  return out.str();
}

std::string ReductionReport::text() const {
  std::ostringstream out;
  if (technique == Technique::wordnet) {
    out << "lexical reduction (hypernym depth " << hypernym_depth << ")\n";
    auto dump = [&](const std::vector<MergeGroup>& groups, const char* axis) {
      for (const auto& g : groups) {
        out << "  merged " << axis << ": " << join(g.members, ", ") << " -> "
            << g.survivor << '\n';
      }
    };
    dump(merged_objects, "objects");
    dump(merged_attributes, "attributes");
    if (merged_objects.empty() && merged_attributes.empty()) {
      out << "  nothing merged\n";
    }
  } else {
    out << "frequency reduction (threshold " << threshold.str() << "%)\n";
    auto dump = [&](const std::vector<Removal>& removals, const char* axis) {
      for (const auto& r : removals) {
        Percent pct = Percent::ratio(100 * static_cast<long long>(r.incidence_count),
                                     static_cast<long long>(r.axis_size));
        out << "  removed " << axis << ' ' << r.label << " (" << pct.str()
            << "%)\n";
      }
    };
    dump(removed_objects, "object");
    dump(removed_attributes, "attribute");
    if (removed_objects.empty() && removed_attributes.empty()) {
      out << "  nothing removed\n";
    }
  }
  return out.str();
}

const char* order_name(ReductionOrder order) {
  switch (order) {
    case ReductionOrder::none: return "none";
    case ReductionOrder::wordnet_only: return "wn";
    case ReductionOrder::frequency_only: return "freq";
    case ReductionOrder::wordnet_then_frequency: return "wn-freq";
    case ReductionOrder::frequency_then_wordnet: return "freq-wn";
  }
  return "none";
}

std::optional<ReductionOrder> order_from_name(std::string_view name) {
  if (name == "none") return ReductionOrder::none;
  if (name == "wn") return ReductionOrder::wordnet_only;
  if (name == "freq") return ReductionOrder::frequency_only;
  if (name == "wn-freq") return ReductionOrder::wordnet_then_frequency;
  if (name == "freq-wn") return ReductionOrder::frequency_then_wordnet;
  return std::nullopt;
}

}  // namespace latticeforge
