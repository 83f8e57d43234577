#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstddef>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "latticeforge/errors.hpp"

namespace latticeforge {

using Bitset = boost::dynamic_bitset<>;

enum class Axis { objects, attributes };

// A binary formal context: finite object and attribute sets plus an
// incidence relation, stored as one bitset per object row and one per
// attribute column so both derivation directions are cheap.
class FormalContext {
 public:
  FormalContext() = default;

  // Builds a context from explicit label lists and (object, attribute)
  // incidence cells. Throws DuplicateLabel if a label repeats on one axis
  // and UnknownLabel if a cell references a label that was not declared.
  static FormalContext from_incidence(
      std::vector<std::string> objects, std::vector<std::string> attributes,
      const std::vector<std::pair<std::string, std::string>>& cells);

  // Builds a context from per-object rows over the attribute axis.
  static FormalContext from_rows(std::vector<std::string> objects,
                                 std::vector<std::string> attributes,
                                 std::vector<Bitset> rows);

  std::size_t object_count() const { return objects_.size(); }
  std::size_t attribute_count() const { return attributes_.size(); }

  const std::vector<std::string>& objects() const { return objects_; }
  const std::vector<std::string>& attributes() const { return attributes_; }

  std::size_t object_index(const std::string& label) const;
  std::size_t attribute_index(const std::string& label) const;
  bool has_object(const std::string& label) const;
  bool has_attribute(const std::string& label) const;

  bool incidence(std::size_t object, std::size_t attribute) const;

  // Row of one object over the attribute axis.
  const Bitset& row(std::size_t object) const { return rows_[object]; }
  // Column of one attribute over the object axis.
  const Bitset& column(std::size_t attribute) const { return cols_[attribute]; }

  // Derivation operators on index sets. The derivation of the empty set is
  // the full opposite axis.
  Bitset intent_of(const Bitset& object_set) const;
  Bitset extent_of(const Bitset& attribute_set) const;
  Bitset close_attributes(const Bitset& attribute_set) const;

  // Label-level counterparts. Inputs are unordered, duplicates are ignored;
  // results are emitted in axis order. Unknown labels throw UnknownLabel.
  std::vector<std::string> intent_of(const std::vector<std::string>& objs) const;
  std::vector<std::string> extent_of(const std::vector<std::string>& attrs) const;
  std::vector<std::string> close_attributes(const std::vector<std::string>& attrs) const;

  // Swaps the two axes; incidence is mirrored.
  FormalContext transposed() const;

  // Equality is positional: label sequences and incidence must both match.
  bool operator==(const FormalContext& other) const;

  // Debug CSV: header row is an empty cell plus attribute labels, then one
  // row per object with 1/0 cells. Labels containing commas or line breaks
  // are rejected.
  std::string to_csv() const;
  static FormalContext from_csv(const std::string& text);

  Bitset object_universe() const;
  Bitset attribute_universe() const;

 private:
  void rebuild_indices();

  std::vector<std::string> objects_;
  std::vector<std::string> attributes_;
  std::vector<Bitset> rows_;
  std::vector<Bitset> cols_;
  std::unordered_map<std::string, std::size_t> object_index_;
  std::unordered_map<std::string, std::size_t> attribute_index_;
};

}  // namespace latticeforge
