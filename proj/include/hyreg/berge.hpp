#pragma once

#include <optional>
#include <vector>

#include "hyreg/hypergraph.hpp"

namespace hyreg {

/// A length-k cycle: distinct vertices v_0..v_{k-1} and distinct edges
/// E_1..E_k with v_{i-1} ∈ E_i and v_{i mod k} ∈ E_i. Lengths start at 2:
/// a 2-cycle is two edges joined through two distinct shared vertices.
struct CycleWitness {
  std::vector<VertexId> vertices;
  std::vector<int> edge_indices;

  int length() const { return static_cast<int>(edge_indices.size()); }
};

/// Replays a witness against the hypergraph.
inline bool verify_cycle_witness(const SimpleHypergraph& h, const CycleWitness& w) {
  int k = w.length();
  if (k < 2 || static_cast<int>(w.vertices.size()) != k) return false;
  VertexSet vs;
  for (VertexId v : w.vertices) {
    if (v < 0 || v >= h.n || vs.contains(v)) return false;
    vs.insert(v);
  }
  std::vector<char> used(h.edges.size(), 0);
  for (int i = 0; i < k; ++i) {
    int e = w.edge_indices[i];
    if (e < 0 || e >= h.edge_count() || used[e]) return false;
    used[e] = 1;
    VertexId from = w.vertices[i];
    VertexId to = w.vertices[(i + 1) % k];
    if (!h.edges[e].contains(from) || !h.edges[e].contains(to)) return false;
  }
  return true;
}

namespace detail {

struct CycleSearch {
  const SimpleHypergraph& h;
  int k;
  CycleWitness partial;
  VertexSet used_vertices;
  std::uint64_t used_edges = 0;

  // Chooses E_depth given v_0..v_{depth-1} and E_1..E_{depth-1}. Choices
  // ascend, so the first completed witness is the lexicographically least in
  // (v_0, E_1, v_1, ..., E_k) order.
  bool extend(int depth) {
    VertexId prev = partial.vertices[depth - 1];
    for (int e = 0; e < h.edge_count(); ++e) {
      if ((used_edges >> e) & 1) continue;
      if (!h.edges[e].contains(prev)) continue;
      if (depth == k) {
        // Closing edge: must return to v_0, no new vertex gets picked.
        if (h.edges[e].contains(partial.vertices[0])) {
          partial.edge_indices.push_back(e);
          return true;
        }
        continue;
      }
      used_edges |= std::uint64_t{1} << e;
      partial.edge_indices.push_back(e);
      bool done = false;
      h.edges[e].for_each([&](int v) {
        if (done || used_vertices.contains(v)) return;
        used_vertices.insert(v);
        partial.vertices.push_back(v);
        if (extend(depth + 1)) {
          done = true;
          return;
        }
        partial.vertices.pop_back();
        used_vertices.erase(v);
      });
      if (done) return true;
      partial.edge_indices.pop_back();
      used_edges &= ~(std::uint64_t{1} << e);
    }
    return false;
  }
};

}  // namespace detail

/// Exhaustive search for a length-k cycle; returns the lexicographically
/// least witness in (v_0, E_1, v_1, ...) order, or nothing.
inline std::optional<CycleWitness> find_cycle(const SimpleHypergraph& h, int k) {
  if (k < 2) fail(Errc::bad_length, "cycle length must be at least 2");
  if (h.edge_count() < k) return std::nullopt;
  for (int v0 = 0; v0 < h.n; ++v0) {
    detail::CycleSearch search{h, k, {}, {}, 0};
    search.partial.vertices.push_back(v0);
    search.used_vertices.insert(v0);
    if (search.extend(1)) return search.partial;
  }
  return std::nullopt;
}

inline bool is_ck_free(const SimpleHypergraph& h, int k) { return !find_cycle(h, k).has_value(); }

inline bool is_c2_c5_free(const SimpleHypergraph& h) {
  return is_ck_free(h, 2) && is_ck_free(h, 5);
}

}  // namespace hyreg
