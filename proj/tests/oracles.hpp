// Independent brute-force reference implementations used only by the tests.
// Everything here recomputes from first principles: no pruning, no reuse of
// the library's search machinery.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hyreg/hypergraph.hpp"

namespace oracles {

using hyreg::SimpleHypergraph;
using hyreg::VertexSet;

inline bool contains_some_edge(const SimpleHypergraph& h, VertexSet s) {
  for (VertexSet e : h.edges)
    if (e.subset_of(s)) return true;
  return false;
}

/// All maximal independent sets, by scanning every subset twice.
inline std::vector<VertexSet> brute_force_facets(const SimpleHypergraph& h) {
  std::vector<VertexSet> facets;
  const std::uint64_t limit = std::uint64_t{1} << h.n;
  for (std::uint64_t s = 0; s < limit; ++s) {
    VertexSet set{s};
    if (contains_some_edge(h, set)) continue;
    bool maximal = true;
    for (int v = 0; v < h.n && maximal; ++v) {
      if (set.contains(v)) continue;
      VertexSet bigger = set | VertexSet::single(v);
      if (!contains_some_edge(h, bigger)) maximal = false;
    }
    if (maximal) facets.push_back(set);
  }
  hyreg::canonical_sort_edges(facets);
  return facets;
}

struct FamilyOptimum {
  int weight = 0;
  std::vector<int> indices;
  bool found = false;
};

/// Exhaustive scan over all nonempty edge subsets; `admits` decides family
/// membership. Ties break toward smaller families, then the lexicographically
/// least index vector.
template <class Admits>
FamilyOptimum exhaustive_best_family(const SimpleHypergraph& h, Admits&& admits) {
  FamilyOptimum best;
  const int m = h.edge_count();
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << m); ++bits) {
    std::vector<int> indices;
    VertexSet u;
    for (int i = 0; i < m; ++i)
      if ((bits >> i) & 1) {
        indices.push_back(i);
        u |= h.edges[i];
      }
    if (!admits(indices, u)) continue;
    int weight = u.size() - static_cast<int>(indices.size());
    bool better = !best.found || weight > best.weight ||
                  (weight == best.weight && indices.size() < best.indices.size()) ||
                  (weight == best.weight && indices.size() == best.indices.size() &&
                   indices < best.indices);
    if (better) best = FamilyOptimum{weight, indices, true};
  }
  return best;
}

inline bool plain_matching(const SimpleHypergraph& h, const std::vector<int>& indices) {
  for (std::size_t i = 0; i < indices.size(); ++i)
    for (std::size_t j = i + 1; j < indices.size(); ++j)
      if (h.edges[indices[i]].intersects(h.edges[indices[j]])) return false;
  return true;
}

inline bool plain_semi_induced(const SimpleHypergraph& h, const std::vector<int>& indices,
                               VertexSet u) {
  for (int e = 0; e < h.edge_count(); ++e) {
    bool member = std::find(indices.begin(), indices.end(), e) != indices.end();
    if (!member && h.edges[e].subset_of(u)) return false;
  }
  return true;
}

inline FamilyOptimum exhaustive_matching(const SimpleHypergraph& h) {
  return exhaustive_best_family(
      h, [&](const std::vector<int>& s, VertexSet) { return plain_matching(h, s); });
}

inline FamilyOptimum exhaustive_semi_induced(const SimpleHypergraph& h) {
  return exhaustive_best_family(
      h, [&](const std::vector<int>& s, VertexSet u) { return plain_semi_induced(h, s, u); });
}

inline FamilyOptimum exhaustive_induced(const SimpleHypergraph& h) {
  return exhaustive_best_family(h, [&](const std::vector<int>& s, VertexSet u) {
    return plain_matching(h, s) && plain_semi_induced(h, s, u);
  });
}

/// Semi-induced matching number through the covered-subset formulation: max
/// of |W| - #(edges inside W) over subsets W whose inside edges cover W.
inline std::optional<int> vertex_section_semi_induced_number(const SimpleHypergraph& h) {
  std::optional<int> best;
  const std::uint64_t limit = std::uint64_t{1} << h.n;
  for (std::uint64_t w = 1; w < limit; ++w) {
    VertexSet set{w};
    VertexSet covered;
    int inside = 0;
    for (VertexSet e : h.edges)
      if (e.subset_of(set)) {
        covered |= e;
        ++inside;
      }
    if (inside == 0 || covered != set) continue;
    int value = set.size() - inside;
    if (!best || value > *best) best = value;
  }
  return best;
}

/// Exhaustive minimum 2-collage cost.
inline std::optional<long long> exhaustive_collage_bound(const SimpleHypergraph& h) {
  const int m = h.edge_count();
  std::optional<long long> best;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
    std::vector<int> family;
    long long cost = 0;
    for (int i = 0; i < m; ++i)
      if ((bits >> i) & 1) {
        family.push_back(i);
        cost += h.edges[i].size() - 1;
      }
    bool collage = true;
    for (VertexSet e : h.edges) {
      bool covered = false;
      for (int v = 0; v < h.n && !covered; ++v) {
        if (!e.contains(v)) continue;
        VertexSet trimmed = e - VertexSet::single(v);
        for (int c : family)
          if (trimmed.subset_of(h.edges[c])) {
            covered = true;
            break;
          }
      }
      if (!covered) {
        collage = false;
        break;
      }
    }
    if (collage && (!best || cost < *best)) best = cost;
  }
  return best;
}

/// Graph k-cycle detection by walking simple vertex cycles (2-uniform only).
inline bool graph_has_k_cycle(const SimpleHypergraph& g, int k) {
  std::vector<std::vector<int>> adj(g.n);
  for (VertexSet e : g.edges) {
    auto vs = e.to_vector();
    adj[vs[0]].push_back(vs[1]);
    adj[vs[1]].push_back(vs[0]);
  }
  std::vector<char> used(g.n, 0);
  bool found = false;
  auto dfs = [&](auto&& self, int start, int at, int depth) -> void {
    if (found) return;
    if (depth == k) {
      for (int nb : adj[at])
        if (nb == start) found = true;
      return;
    }
    for (int nb : adj[at]) {
      if (used[nb] || nb <= start) continue;
      used[nb] = 1;
      self(self, start, nb, depth + 1);
      used[nb] = 0;
    }
  };
  for (int start = 0; start < g.n && !found; ++start) {
    used.assign(g.n, 0);
    used[start] = 1;
    dfs(dfs, start, start, 1);
  }
  return found;
}

/// Reduced Euler characteristic by face counting: sum over all faces
/// (including the empty one) of (-1)^dim.
inline long long reduced_euler_by_faces(const SimpleHypergraph& h) {
  long long sum = 0;
  const std::uint64_t limit = std::uint64_t{1} << h.n;
  for (std::uint64_t s = 0; s < limit; ++s) {
    VertexSet set{s};
    if (contains_some_edge(h, set)) continue;
    int dim = set.size() - 1;
    sum += (dim % 2 == 0) ? 1 : -1;
  }
  return sum;
}

}  // namespace oracles
