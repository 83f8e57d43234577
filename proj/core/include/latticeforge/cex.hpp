#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "latticeforge/context.hpp"

namespace latticeforge {

// One parsed conceptual-system document. The extended variant carries a
// raw incidence count per attribute and per object.
struct CexDocument {
  FormalContext context;
  bool extended = false;
  std::vector<std::size_t> object_frequencies;
  std::vector<std::size_t> attribute_frequencies;
};

// Parses a conceptual-system XML document holding one binary context.
// Attributes are ordered by their Identifier, objects by document order;
// a Lattices section is ignored. Throws XmlError for malformed XML,
// UnsupportedDocument when no binary context is present and
// DanglingReference for intents naming unknown attribute identifiers.
CexDocument read_cex(std::string_view bytes);

// Serializes a context in the conceptual-system layout, byte-
// deterministically; when extended, Frequency attributes carry the raw
// incidence counts.
std::string write_cex(const FormalContext& ctx, bool extended);

// Descriptions of every stored frequency that disagrees with the
// recomputed incidence count; empty for consistent or non-extended
// documents.
std::vector<std::string> frequency_mismatches(const CexDocument& doc);

// Throws FrequencyMismatch when frequency_mismatches is non-empty.
void validate_frequencies(const CexDocument& doc);

}  // namespace latticeforge
