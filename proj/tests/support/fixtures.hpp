#pragma once

// Shared context fixtures and small oracles used by the unit and
// acceptance suites.

#include <algorithm>
#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include <latticeforge/context.hpp>
#include <latticeforge/lattice.hpp>

namespace lf_test {

// Destinations of six airlines.
inline latticeforge::FormalContext airlines() {
  return latticeforge::FormalContext::from_rows(
      {"Air Canada", "British Airways", "Scandinavian Airline",
       "Turkish Airline", "United Airlines", "Iraqi Airways"},
      {"Latin America", "Europe", "Canada", "Middle East", "United States"},
      {latticeforge::Bitset(std::string("00111")),
       latticeforge::Bitset(std::string("10111")),
       latticeforge::Bitset(std::string("01111")),
       latticeforge::Bitset(std::string("11010")),
       latticeforge::Bitset(std::string("11010")),
       latticeforge::Bitset(std::string("01010"))});
}

// Three verbs against the nouns they occurred with.
inline latticeforge::FormalContext verbs() {
  return latticeforge::FormalContext::from_incidence(
      {"house", "combine", "reference"}, {"building", "reference", "allude"},
      {{"house", "building"},
       {"house", "allude"},
       {"combine", "building"},
       {"reference", "allude"}});
}

// Five tourism nouns against six verbs.
inline latticeforge::FormalContext tourism() {
  return latticeforge::FormalContext::from_incidence(
      {"apartment", "car", "motor-bike", "excursion", "trip"},
      {"book", "reserve", "rent", "drive", "ride", "join"},
      {{"apartment", "book"},
       {"apartment", "reserve"},
       {"apartment", "rent"},
       {"car", "book"},
       {"car", "rent"},
       {"car", "drive"},
       {"motor-bike", "book"},
       {"motor-bike", "rent"},
       {"motor-bike", "drive"},
       {"motor-bike", "ride"},
       {"excursion", "book"},
       {"excursion", "join"},
       {"trip", "book"},
       {"trip", "reserve"},
       {"trip", "join"}});
}

// Four objects by four attributes; A and B merge in the lexical example.
inline latticeforge::FormalContext merge_demo() {
  return latticeforge::FormalContext::from_incidence(
      {"A", "B", "C", "D"}, {"W", "X", "Y", "Z"},
      {{"A", "W"},
       {"A", "Y"},
       {"B", "W"},
       {"B", "Z"},
       {"C", "Y"},
       {"C", "Z"},
       {"D", "X"},
       {"D", "Y"}});
}

// Five objects by four attributes with known relative frequencies.
inline latticeforge::FormalContext freq_demo() {
  return latticeforge::FormalContext::from_incidence(
      {"A", "B", "C", "D", "E"}, {"W", "X", "Y", "Z"},
      {{"A", "W"},
       {"A", "Y"},
       {"A", "Z"},
       {"B", "Z"},
       {"C", "Y"},
       {"C", "Z"},
       {"D", "X"},
       {"E", "W"},
       {"E", "Y"}});
}

// The British Museum context: 19 objects, 12 attributes, 13 incidences.
inline latticeforge::FormalContext museum() {
  return latticeforge::FormalContext::from_incidence(
      {"museum", "London", "history", "be", "existence", "physician", "open",
       "public", "result", "two", "footprint", "object", "move", "house",
       "body", "sponsor", "culture", "charge", "MacGregor"},
      {"be", "dedicate", "originate", "illustrate", "document", "result",
       "object", "house", "sponsor", "Sport", "charge", "fee"},
      {{"museum", "be"},
       {"London", "dedicate"},
       {"existence", "originate"},
       {"result", "be"},
       {"footprint", "result"},
       {"object", "be"},
       {"object", "object"},
       {"body", "be"},
       {"body", "sponsor"},
       {"body", "charge"},
       {"culture", "Sport"},
       {"MacGregor", "be"},
       {"MacGregor", "fee"}});
}

inline std::string data_dir() { return LF_TEST_DATA_DIR; }
inline std::string wordnet_dir() { return data_dir() + "/wordnet/dict"; }
inline std::string corpus_dir() { return data_dir() + "/corpus"; }

// Uniform random context with up to the given axis sizes (inclusive).
inline latticeforge::FormalContext random_context(std::mt19937& rng,
                                                  std::size_t max_objects,
                                                  std::size_t max_attributes,
                                                  double density = 0.45) {
  std::uniform_int_distribution<std::size_t> gdist(1, max_objects);
  std::uniform_int_distribution<std::size_t> mdist(1, max_attributes);
  std::bernoulli_distribution cell(density);
  const std::size_t g = gdist(rng);
  const std::size_t m = mdist(rng);
  std::vector<std::string> objects, attributes;
  for (std::size_t i = 0; i < g; ++i) objects.push_back("g" + std::to_string(i));
  for (std::size_t j = 0; j < m; ++j) attributes.push_back("m" + std::to_string(j));
  std::vector<latticeforge::Bitset> rows(g, latticeforge::Bitset(m));
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (cell(rng)) rows[i].set(j);
  return latticeforge::FormalContext::from_rows(std::move(objects),
                                                std::move(attributes),
                                                std::move(rows));
}

// Sorts concepts into one canonical order so enumerations can be compared
// independently of how they were produced.
inline std::vector<latticeforge::FormalConcept> sorted_concepts(
    std::vector<latticeforge::FormalConcept> concepts) {
  std::sort(concepts.begin(), concepts.end(),
            [](const auto& a, const auto& b) {
              if (a.extent != b.extent) return a.extent < b.extent;
              return a.intent < b.intent;
            });
  return concepts;
}

// Exhaustive maximum-antichain size over the concept order (extent
// inclusion). Exponential; only meant for small fixture lattices.
inline std::size_t max_antichain_brute_force(
    const latticeforge::ConceptLattice& lattice,
    const latticeforge::FormalContext& ctx) {
  const std::size_t n = lattice.concepts.size();
  std::vector<latticeforge::Bitset> extents;
  extents.reserve(n);
  for (const auto& node : lattice.concepts) {
    latticeforge::Bitset extent(ctx.object_count());
    for (const auto& label : node.extent) extent.set(ctx.object_index(label));
    extents.push_back(std::move(extent));
  }
  auto comparable = [&](std::size_t a, std::size_t b) {
    return extents[a].is_subset_of(extents[b]) ||
           extents[b].is_subset_of(extents[a]);
  };
  std::size_t best = 0;
  std::vector<std::size_t> chosen;
  auto grow = [&](auto&& self, std::size_t next) -> void {
    best = std::max(best, chosen.size());
    for (std::size_t i = next; i < n; ++i) {
      bool fits = true;
      for (std::size_t j : chosen)
        if (comparable(i, j)) {
          fits = false;
          break;
        }
      if (!fits) continue;
      chosen.push_back(i);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  grow(grow, 0);
  return best;
}

}  // namespace lf_test
