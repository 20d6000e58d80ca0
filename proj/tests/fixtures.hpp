#pragma once

#include "hyreg/hypergraph.hpp"

namespace fixtures {

using hyreg::SimpleHypergraph;

/// Two overlapping triples sharing a pair, plus a triple hanging off one end.
inline SimpleHypergraph triple_chain() {
  return hyreg::build_simple(6, std::vector<std::vector<int>>{{0, 1, 2}, {1, 2, 3}, {3, 4, 5}});
}

inline SimpleHypergraph star() {
  return hyreg::build_simple(4, std::vector<std::vector<int>>{{0, 1}, {0, 2}, {0, 3}});
}

inline SimpleHypergraph pentagon() {
  return hyreg::build_simple(
      5, std::vector<std::vector<int>>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
}

inline SimpleHypergraph triangle() {
  return hyreg::build_simple(3, std::vector<std::vector<int>>{{0, 1}, {1, 2}, {0, 2}});
}

/// k triples through one common apex vertex (here k = 3, d = 3; apex = 6).
inline SimpleHypergraph sunflower() {
  return hyreg::build_simple(7, std::vector<std::vector<int>>{{0, 1, 6}, {2, 3, 6}, {4, 5, 6}});
}

/// Four pairs around one wide edge; the fixed example behind flaw_demo.
/// Vertices a..f are 0..5.
inline SimpleHypergraph collage_defect() {
  return hyreg::build_simple(
      6, std::vector<std::vector<int>>{{0, 1}, {0, 2}, {3, 5}, {4, 5}, {1, 2, 3, 4}});
}

inline SimpleHypergraph single_edge(int d) {
  std::vector<int> edge;
  for (int i = 0; i < d; ++i) edge.push_back(i);
  return hyreg::build_simple(d, std::vector<std::vector<int>>{edge});
}

/// Minimal 6-vertex triangulation of the projective plane, fed in as the
/// hypergraph of its ten non-face triples.
inline SimpleHypergraph projective_plane_nonfaces() {
  return hyreg::build_simple(6, std::vector<std::vector<int>>{{0, 1, 2},
                                                              {0, 1, 3},
                                                              {0, 2, 4},
                                                              {0, 3, 5},
                                                              {0, 4, 5},
                                                              {1, 2, 5},
                                                              {1, 3, 4},
                                                              {1, 4, 5},
                                                              {2, 3, 4},
                                                              {2, 3, 5}});
}

}  // namespace fixtures
