#pragma once

#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "hyreg/complex.hpp"

namespace hyreg {

struct SheddingTree;
using SheddingTreePtr = std::shared_ptr<const SheddingTree>;

/// Certificate of vertex decomposability. Shed nodes name the vertex and the
/// subtrees for the deletion and the link; leaves record which base case
/// fired (full simplex on the remaining vertices, the empty-face complex, or
/// the void complex).
struct SheddingTree {
  enum class Kind { simplex, empty_face, void_complex, shed };

  Kind kind = Kind::simplex;
  VertexId vertex = -1;
  SheddingTreePtr del_subtree;
  SheddingTreePtr link_subtree;

  static SheddingTreePtr leaf(Kind k) {
    auto node = std::make_shared<SheddingTree>();
    node->kind = k;
    return node;
  }

  static SheddingTreePtr shed(VertexId x, SheddingTreePtr del, SheddingTreePtr lnk) {
    auto node = std::make_shared<SheddingTree>();
    node->kind = Kind::shed;
    node->vertex = x;
    node->del_subtree = std::move(del);
    node->link_subtree = std::move(lnk);
    return node;
  }
};

inline const char* shedding_kind_name(SheddingTree::Kind k) {
  switch (k) {
    case SheddingTree::Kind::simplex: return "simplex";
    case SheddingTree::Kind::empty_face: return "empty_face";
    case SheddingTree::Kind::void_complex: return "void";
    case SheddingTree::Kind::shed: return "shed";
  }
  return "?";
}

/// True when every facet of the deletion of x is a facet of the complex.
inline bool is_shedding_vertex(const SimplicialComplex& c, VertexId x) {
  if (c.is_void()) fail(Errc::void_complex, "shedding vertices are undefined for the void complex");
  detail::check_complex_vertex(c, x);
  SimplicialComplex del = deletion(c, x);
  for (VertexSet f : del.facets)
    if (std::find(c.facets.begin(), c.facets.end(), f) == c.facets.end()) return false;
  return true;
}

namespace detail {

struct DecomposabilitySearch {
  // Keyed on (remaining candidate vertices, facet masks); complexes met in
  // the recursion all share one ground size.
  using Key = std::pair<std::uint64_t, std::vector<std::uint64_t>>;
  std::map<Key, std::optional<SheddingTreePtr>> memo;

  std::optional<SheddingTreePtr> run(const SimplicialComplex& c, VertexSet active) {
    if (c.is_void()) return SheddingTree::leaf(SheddingTree::Kind::void_complex);
    if (c.facets.size() == 1) {
      if (c.facets[0].empty()) return SheddingTree::leaf(SheddingTree::Kind::empty_face);
      if (c.facets[0] == active) return SheddingTree::leaf(SheddingTree::Kind::simplex);
    }
    if (active.empty()) return std::nullopt;

    Key key{active.bits(), {}};
    key.second.reserve(c.facets.size());
    for (VertexSet f : c.facets) key.second.push_back(f.bits());
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    std::optional<SheddingTreePtr> result;
    for (int x = 0; x < c.ground && !result; ++x) {
      if (!active.contains(x)) continue;
      SimplicialComplex del = deletion(c, x);
      bool shedding = true;
      for (VertexSet f : del.facets)
        if (std::find(c.facets.begin(), c.facets.end(), f) == c.facets.end()) {
          shedding = false;
          break;
        }
      if (!shedding) continue;
      VertexSet rest = active - VertexSet::single(x);
      auto del_tree = run(del, rest);
      if (!del_tree) continue;
      auto link_tree = run(link(c, x), rest);
      if (!link_tree) continue;
      result = SheddingTree::shed(x, *del_tree, *link_tree);
    }
    memo.emplace(std::move(key), result);
    return result;
  }
};

}  // namespace detail

/// Searches for a shedding certificate; vertices are tried in ascending
/// order, so the certificate is deterministic. Both the void complex and the
/// empty-face complex count as decomposable base cases.
inline std::optional<SheddingTreePtr> vertex_decomposable(const SimplicialComplex& c) {
  detail::DecomposabilitySearch search;
  return search.run(c, VertexSet::full(c.ground));
}

namespace detail {

inline bool replay_tree(const SimplicialComplex& c, VertexSet active, const SheddingTree& t) {
  switch (t.kind) {
    case SheddingTree::Kind::void_complex:
      return c.is_void();
    case SheddingTree::Kind::empty_face:
      return !c.is_void() && c.facets.size() == 1 && c.facets[0].empty();
    case SheddingTree::Kind::simplex:
      return !c.is_void() && c.facets.size() == 1 && c.facets[0] == active;
    case SheddingTree::Kind::shed: {
      if (c.is_void()) return false;
      if (t.vertex < 0 || t.vertex >= c.ground || !active.contains(t.vertex)) return false;
      if (!t.del_subtree || !t.link_subtree) return false;
      if (!is_shedding_vertex(c, t.vertex)) return false;
      VertexSet rest = active - VertexSet::single(t.vertex);
      return replay_tree(deletion(c, t.vertex), rest, *t.del_subtree) &&
             replay_tree(link(c, t.vertex), rest, *t.link_subtree);
    }
  }
  return false;
}

}  // namespace detail

/// Replays a certificate against the complex.
inline bool verify_tree(const SimplicialComplex& c, const SheddingTree& t) {
  return detail::replay_tree(c, VertexSet::full(c.ground), t);
}

}  // namespace hyreg
