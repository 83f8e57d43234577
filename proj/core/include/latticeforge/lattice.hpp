#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "latticeforge/context.hpp"

namespace latticeforge {

// A formal concept with its extent and intent as lexicographically sorted
// label lists.
struct FormalConcept {
  std::vector<std::string> extent;
  std::vector<std::string> intent;

  bool operator==(const FormalConcept&) const = default;
};

// Cover relation of the concept order: first is the lower concept, second
// the upper one, both as indices into ConceptLattice::concepts.
using CoverEdge = std::pair<std::size_t, std::size_t>;

struct ConceptLattice {
  // Canonical order: extent size descending, ties by lexicographic extent.
  std::vector<FormalConcept> concepts;
  // Sorted by (lower, upper).
  std::vector<CoverEdge> covers;
  std::size_t top = 0;
  std::size_t bottom = 0;
};

struct LatticeStats {
  std::size_t concepts = 0;
  std::size_t edges = 0;
  // Longest top-to-bottom chain, counted in edges.
  std::size_t height = 0;
  // Enclosing interval for the width (largest antichain). When width_exact
  // is set the two bounds coincide and equal the Dilworth width.
  std::size_t width_lo = 0;
  std::size_t width_hi = 0;
  bool width_exact = false;
};

// Above this many concepts the exact Dilworth width computation is skipped
// and the trivial upper bound (concepts - height) is reported instead.
inline constexpr std::size_t kExactWidthLimit = 512;

// The brute-force oracle refuses contexts with more attributes than this.
inline constexpr std::size_t kOracleAttributeLimit = 20;

// Enumerates all formal concepts in canonical order using lectic
// (NextClosure style) iteration over closed attribute sets.
std::vector<FormalConcept> enumerate_concepts(const FormalContext& ctx);

// Independent oracle: closes every attribute subset and deduplicates.
// Throws OracleSizeExceeded when the context has more than
// kOracleAttributeLimit attributes.
std::vector<FormalConcept> brute_force_concepts(const FormalContext& ctx);

// Enumerates concepts and computes the cover relation (transitive
// reduction of the extent-inclusion order).
ConceptLattice build_lattice(const FormalContext& ctx);

LatticeStats lattice_stats(const ConceptLattice& lattice);

// Graphviz rendering of the Hasse diagram, top at the top.
std::string export_dot(const ConceptLattice& lattice);

inline constexpr const char* kStatsCsvHeader = "concepts,edges,height,width_lo,width_hi";

// One CSV data row matching kStatsCsvHeader.
std::string stats_csv_row(const LatticeStats& stats);

}  // namespace latticeforge
