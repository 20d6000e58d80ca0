#pragma once

#include <optional>
#include <vector>

#include "hyreg/hypergraph.hpp"

namespace hyreg {

/// Ceiling for facet computation by subset enumeration.
inline constexpr int kMaxComplexGround = 20;

/// A simplicial complex given by its facets over vertices 0..ground-1.
/// Two degenerate complexes are distinguished: the void complex (no faces at
/// all, void_flag set) and the complex whose only face is the empty set (one
/// empty facet, void_flag clear).
struct SimplicialComplex {
  int ground = 0;
  std::vector<VertexSet> facets;
  bool void_flag = false;

  static SimplicialComplex void_complex(int ground) {
    return SimplicialComplex{ground, {}, true};
  }

  static SimplicialComplex empty_face_complex(int ground) {
    return SimplicialComplex{ground, {VertexSet{}}, false};
  }

  bool is_void() const { return void_flag; }

  /// Vertices appearing in some face.
  VertexSet support() const {
    VertexSet s;
    for (VertexSet f : facets) s |= f;
    return s;
  }

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.ground == b.ground && a.void_flag == b.void_flag && a.facets == b.facets;
  }
};

/// Checks the representation invariants (facet antichain, canonical order,
/// range, void encoding).
inline bool is_valid_complex(const SimplicialComplex& c) {
  if (c.ground < 0 || c.ground > kMaxVertices) return false;
  if (c.void_flag) return c.facets.empty();
  if (c.facets.empty()) return false;  // a non-void complex has at least {}
  for (std::size_t i = 0; i < c.facets.size(); ++i) {
    if (!c.facets[i].subset_of(VertexSet::full(c.ground))) return false;
    if (i + 1 < c.facets.size() && !edge_less(c.facets[i], c.facets[i + 1])) return false;
    for (std::size_t j = 0; j < c.facets.size(); ++j)
      if (i != j && c.facets[i].subset_of(c.facets[j])) return false;
  }
  return true;
}

namespace detail {

/// Normalizes a face list into the maximal ones, canonically sorted.
inline std::vector<VertexSet> maximal_faces(std::vector<VertexSet> faces) {
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  std::vector<VertexSet> out;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < faces.size() && maximal; ++j)
      if (i != j && faces[i].subset_of(faces[j])) maximal = false;
    if (maximal) out.push_back(faces[i]);
  }
  canonical_sort_edges(out);
  return out;
}

}  // namespace detail

/// Builds a complex from any generating list of faces (their downward closure
/// is implied). An empty list yields the void complex.
inline SimplicialComplex complex_from_faces(int ground, std::vector<VertexSet> faces) {
  if (faces.empty()) return SimplicialComplex::void_complex(ground);
  return SimplicialComplex{ground, detail::maximal_faces(std::move(faces)), false};
}

namespace detail {

/// independent[s] = 1 iff the subset s contains no edge of h.
inline std::vector<char> independence_bitmap(const SimpleHypergraph& h) {
  const std::uint64_t limit = std::uint64_t{1} << h.n;
  std::vector<char> independent(limit, 1);
  for (VertexSet e : h.edges) {
    // Mark every superset of e dependent by scanning subsets of the complement.
    const std::uint64_t rest = VertexSet::full(h.n).bits() & ~e.bits();
    std::uint64_t s = rest;
    while (true) {
      independent[s | e.bits()] = 0;
      if (s == 0) break;
      s = (s - 1) & rest;
    }
  }
  return independent;
}

}  // namespace detail

/// The complex whose faces are the vertex sets containing no edge of H.
/// Facets are found by enumerating all subsets of the ground set.
inline SimplicialComplex independence_complex(const SimpleHypergraph& h) {
  if (h.n > kMaxComplexGround)
    fail(Errc::too_large, "independence complex enumeration is capped at ground size " +
                              std::to_string(kMaxComplexGround));
  const std::uint64_t limit = std::uint64_t{1} << h.n;
  std::vector<char> independent = detail::independence_bitmap(h);
  std::vector<VertexSet> facets;
  for (std::uint64_t s = 0; s < limit; ++s) {
    if (!independent[s]) continue;
    bool maximal = true;
    for (int v = 0; v < h.n && maximal; ++v)
      if (!((s >> v) & 1) && independent[s | (std::uint64_t{1} << v)]) maximal = false;
    if (maximal) facets.push_back(VertexSet(s));
  }
  canonical_sort_edges(facets);
  return SimplicialComplex{h.n, std::move(facets), false};
}

/// Max facet size minus one; -1 for the empty-face complex, absent for void.
inline std::optional<int> dimension(const SimplicialComplex& c) {
  if (c.is_void()) return std::nullopt;
  int best = -1;
  for (VertexSet f : c.facets) best = std::max(best, f.size() - 1);
  return best;
}

inline bool is_face(const SimplicialComplex& c, VertexSet f) {
  if (c.is_void()) return false;
  for (VertexSet facet : c.facets)
    if (f.subset_of(facet)) return true;
  return false;
}

namespace detail {

inline void check_complex_vertex(const SimplicialComplex& c, VertexId x) {
  if (x < 0 || x >= c.ground) fail(Errc::bad_vertex, "vertex " + std::to_string(x));
}

}  // namespace detail

/// Faces not containing x. The ground set is kept; x becomes an absent vertex.
inline SimplicialComplex deletion(const SimplicialComplex& c, VertexId x) {
  detail::check_complex_vertex(c, x);
  if (c.is_void()) return c;
  std::vector<VertexSet> faces;
  faces.reserve(c.facets.size());
  for (VertexSet f : c.facets) faces.push_back(f - VertexSet::single(x));
  return SimplicialComplex{c.ground, detail::maximal_faces(std::move(faces)), false};
}

/// Faces F with x ∉ F and F ∪ {x} a face. Void when {x} is not a face.
inline SimplicialComplex link(const SimplicialComplex& c, VertexId x) {
  detail::check_complex_vertex(c, x);
  if (c.is_void()) return c;
  std::vector<VertexSet> faces;
  for (VertexSet f : c.facets)
    if (f.contains(x)) faces.push_back(f - VertexSet::single(x));
  if (faces.empty()) return SimplicialComplex::void_complex(c.ground);
  // Facets containing x stay incomparable after dropping x.
  canonical_sort_edges(faces);
  return SimplicialComplex{c.ground, std::move(faces), false};
}

/// Faces of the complex contained in W.
inline SimplicialComplex induced_subcomplex(const SimplicialComplex& c, VertexSet w) {
  if (!w.subset_of(VertexSet::full(c.ground)))
    fail(Errc::bad_vertex_set, "W is not a subset of the ground set");
  if (c.is_void()) return c;
  std::vector<VertexSet> faces;
  faces.reserve(c.facets.size());
  for (VertexSet f : c.facets) faces.push_back(f & w);
  return SimplicialComplex{c.ground, detail::maximal_faces(std::move(faces)), false};
}

}  // namespace hyreg
