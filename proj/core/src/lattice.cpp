#include "latticeforge/lattice.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

namespace latticeforge {

namespace {

Bitset prefix_mask(std::size_t size, std::size_t upto) {
  Bitset mask(size);
  for (std::size_t i = 0; i < upto; ++i) mask.set(i);
  return mask;
}

std::vector<std::string> bits_to_sorted_labels(const Bitset& bits,
                                               const std::vector<std::string>& axis) {
  std::vector<std::string> out;
  out.reserve(bits.count());
  for (std::size_t i = bits.find_first(); i != Bitset::npos; i = bits.find_next(i)) {
    out.push_back(axis[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct RawConcept {
  Bitset extent;
  Bitset intent;
};

// Produces the canonical presentation: extent size descending, ties broken
// by the lexicographic order of the sorted extent label lists.
std::vector<FormalConcept> canonicalize(std::vector<RawConcept> raw,
                                        const FormalContext& ctx,
                                        std::vector<Bitset>* extents_out) {
  struct Entry {
    FormalConcept concept_;
    Bitset extent;
  };
  std::vector<Entry> entries;
  entries.reserve(raw.size());
  for (auto& rc : raw) {
    Entry e;
    e.concept_.extent = bits_to_sorted_labels(rc.extent, ctx.objects());
    e.concept_.intent = bits_to_sorted_labels(rc.intent, ctx.attributes());
    e.extent = std::move(rc.extent);
    entries.push_back(std::move(e));
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.concept_.extent.size() != b.concept_.extent.size()) {
      return a.concept_.extent.size() > b.concept_.extent.size();
    }
    return a.concept_.extent < b.concept_.extent;
  });
  std::vector<FormalConcept> concepts;
  concepts.reserve(entries.size());
  if (extents_out) extents_out->clear();
  for (auto& e : entries) {
    concepts.push_back(std::move(e.concept_));
    if (extents_out) extents_out->push_back(std::move(e.extent));
  }
  return concepts;
}

std::vector<RawConcept> enumerate_raw(const FormalContext& ctx) {
  const std::size_t m = ctx.attribute_count();
  std::vector<RawConcept> raw;
  Bitset current = ctx.close_attributes(Bitset(m));
  for (;;) {
    raw.push_back({ctx.extent_of(current), current});
    if (current.count() == m) break;
    bool advanced = false;
    for (std::size_t i = m; i-- > 0;) {
      if (current.test(i)) continue;
      Bitset mask = prefix_mask(m, i);
      Bitset candidate = current & mask;
      candidate.set(i);
      Bitset closed = ctx.close_attributes(candidate);
      if ((closed & mask) == (current & mask)) {
        current = std::move(closed);
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
  return raw;
}

// Hopcroft-Karp maximum matching on a bipartite graph with n nodes per side.
class BipartiteMatcher {
 public:
  BipartiteMatcher(std::size_t n, std::vector<std::vector<std::size_t>> adj)
      : n_(n), adj_(std::move(adj)) {}

  std::size_t max_matching() {
    match_left_.assign(n_, kFree);
    match_right_.assign(n_, kFree);
    std::size_t matching = 0;
    while (bfs()) {
      for (std::size_t u = 0; u < n_; ++u) {
        if (match_left_[u] == kFree && dfs(u)) ++matching;
      }
    }
    return matching;
  }

 private:
  static constexpr std::size_t kFree = static_cast<std::size_t>(-1);
  static constexpr std::size_t kInf = static_cast<std::size_t>(-1);

  bool bfs() {
    std::deque<std::size_t> queue;
    dist_.assign(n_, kInf);
    for (std::size_t u = 0; u < n_; ++u) {
      if (match_left_[u] == kFree) {
        dist_[u] = 0;
        queue.push_back(u);
      }
    }
    bool found = false;
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t v : adj_[u]) {
        std::size_t w = match_right_[v];
        if (w == kFree) {
          found = true;
        } else if (dist_[w] == kInf) {
          dist_[w] = dist_[u] + 1;
          queue.push_back(w);
        }
      }
    }
    return found;
  }

  bool dfs(std::size_t u) {
    for (std::size_t v : adj_[u]) {
      std::size_t w = match_right_[v];
      if (w == kFree || (dist_[w] == dist_[u] + 1 && dfs(w))) {
        match_left_[u] = v;
        match_right_[v] = u;
        return true;
      }
    }
    dist_[u] = kInf;
    return false;
  }

  std::size_t n_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::size_t> match_left_, match_right_;
  std::vector<std::size_t> dist_;
};

std::string escape_dot(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

std::string label_list(const std::vector<std::string>& labels) {
  std::string out = "{";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ", ";
    out += labels[i];
  }
  out += "}";
  return out;
}

}  // namespace

std::vector<FormalConcept> enumerate_concepts(const FormalContext& ctx) {
  return canonicalize(enumerate_raw(ctx), ctx, nullptr);
}

std::vector<FormalConcept> brute_force_concepts(const FormalContext& ctx) {
  const std::size_t m = ctx.attribute_count();
  if (m > kOracleAttributeLimit) {
    throw OracleSizeExceeded("brute-force oracle limited to " +
                             std::to_string(kOracleAttributeLimit) +
                             " attributes, got " + std::to_string(m));
  }
  std::vector<RawConcept> raw;
  std::vector<Bitset> seen;
  for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << m); ++subset) {
    Bitset attrs(m);
    for (std::size_t j = 0; j < m; ++j) {
      if (subset >> j & 1) attrs.set(j);
    }
    Bitset closed = ctx.close_attributes(attrs);
    if (std::find(seen.begin(), seen.end(), closed) == seen.end()) {
      seen.push_back(closed);
      raw.push_back({ctx.extent_of(closed), std::move(closed)});
    }
  }
  return canonicalize(std::move(raw), ctx, nullptr);
}

ConceptLattice build_lattice(const FormalContext& ctx) {
  std::vector<Bitset> extents;
  ConceptLattice lattice;
  lattice.concepts = canonicalize(enumerate_raw(ctx), ctx, &extents);
  const std::size_t n = lattice.concepts.size();

  for (std::size_t i = 0; i < n; ++i) {
    // Superconcepts have strictly larger extents, hence smaller indices.
    std::vector<std::size_t> uppers;
    for (std::size_t j = 0; j < i; ++j) {
      if (extents[i].is_proper_subset_of(extents[j])) uppers.push_back(j);
    }
    std::sort(uppers.begin(), uppers.end(), [&](std::size_t a, std::size_t b) {
      return extents[a].count() < extents[b].count();
    });
    std::vector<std::size_t> covers;
    for (std::size_t j : uppers) {
      bool minimal = true;
      for (std::size_t c : covers) {
        if (extents[c].is_proper_subset_of(extents[j])) {
          minimal = false;
          break;
        }
      }
      if (minimal) covers.push_back(j);
    }
    for (std::size_t j : covers) lattice.covers.emplace_back(i, j);
  }
  std::sort(lattice.covers.begin(), lattice.covers.end());

  lattice.top = 0;
  lattice.bottom = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (extents[i].count() > extents[lattice.top].count()) lattice.top = i;
    if (extents[i].count() < extents[lattice.bottom].count()) lattice.bottom = i;
  }
  return lattice;
}

LatticeStats lattice_stats(const ConceptLattice& lattice) {
  const std::size_t n = lattice.concepts.size();
  LatticeStats stats;
  stats.concepts = n;
  stats.edges = lattice.covers.size();
  if (n == 0) return stats;

  std::vector<std::vector<std::size_t>> lowers_of(n);
  std::vector<std::size_t> pending_uppers(n, 0);
  for (const auto& [lower, upper] : lattice.covers) {
    lowers_of[upper].push_back(lower);
    ++pending_uppers[lower];
  }

  // Longest distance from the top, found by processing nodes once all their
  // upper covers are done.
  std::vector<std::size_t> level(n, 0);
  std::deque<std::size_t> queue;
  std::vector<std::size_t> topo;
  for (std::size_t i = 0; i < n; ++i) {
    if (pending_uppers[i] == 0) queue.push_back(i);
  }
  while (!queue.empty()) {
    std::size_t u = queue.front();
    queue.pop_front();
    topo.push_back(u);
    for (std::size_t l : lowers_of[u]) {
      level[l] = std::max(level[l], level[u] + 1);
      if (--pending_uppers[l] == 0) queue.push_back(l);
    }
  }

  stats.height = *std::max_element(level.begin(), level.end());

  std::vector<std::size_t> per_level(stats.height + 1, 0);
  for (std::size_t lv : level) ++per_level[lv];
  stats.width_lo = *std::max_element(per_level.begin(), per_level.end());

  if (n <= kExactWidthLimit) {
    // Dilworth: the width equals n minus a maximum matching in the
    // bipartite graph of strict comparabilities.
    std::vector<Bitset> below(n, Bitset(n));
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
      std::size_t u = *it;
      for (std::size_t l : lowers_of[u]) {
        below[u].set(l);
        below[u] |= below[l];
      }
    }
    std::vector<std::vector<std::size_t>> adj(n);
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = below[u].find_first(); v != Bitset::npos;
           v = below[u].find_next(v)) {
        adj[u].push_back(v);
      }
    }
    std::size_t matching = BipartiteMatcher(n, std::move(adj)).max_matching();
    stats.width_lo = stats.width_hi = n - matching;
    stats.width_exact = true;
  } else {
    stats.width_hi = n - stats.height;
    stats.width_exact = false;
  }
  return stats;
}

std::string export_dot(const ConceptLattice& lattice) {
  std::ostringstream out;
  out << "digraph lattice {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=box];\n";
  for (std::size_t i = 0; i < lattice.concepts.size(); ++i) {
    const auto& c = lattice.concepts[i];
    out << "  c" << i << " [label=\"" << escape_dot(label_list(c.extent))
        << "\\n" << escape_dot(label_list(c.intent)) << "\"];\n";
  }
  for (const auto& [lower, upper] : lattice.covers) {
    out << "  c" << lower << " -> c" << upper << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string stats_csv_row(const LatticeStats& stats) {
  std::ostringstream out;
  out << stats.concepts << ',' << stats.edges << ',' << stats.height << ','
      << stats.width_lo << ',' << stats.width_hi;
  return out.str();
}

}  // namespace latticeforge
