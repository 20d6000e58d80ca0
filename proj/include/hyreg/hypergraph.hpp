#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyreg {

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

enum class Errc {
  empty_edge,
  out_of_range,
  not_antichain,
  duplicate_edge,
  bad_vertex,
  bad_vertex_set,
  bad_edge_index,
  empty_index_set,
  not_uniform,
  bad_length,
  too_few_edges,
  too_large,
  parse_error,
  config_error,
  unknown_claim,
  void_complex,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::empty_edge: return "EmptyEdge";
    case Errc::out_of_range: return "OutOfRange";
    case Errc::not_antichain: return "NotAntichain";
    case Errc::duplicate_edge: return "DuplicateEdge";
    case Errc::bad_vertex: return "BadVertex";
    case Errc::bad_vertex_set: return "BadVertexSet";
    case Errc::bad_edge_index: return "BadEdgeIndex";
    case Errc::empty_index_set: return "EmptyIndexSet";
    case Errc::not_uniform: return "NotUniform";
    case Errc::bad_length: return "BadLength";
    case Errc::too_few_edges: return "TooFewEdges";
    case Errc::too_large: return "TooLarge";
    case Errc::parse_error: return "ParseError";
    case Errc::config_error: return "ConfigError";
    case Errc::unknown_claim: return "UnknownClaim";
    case Errc::void_complex: return "VoidComplex";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

// ---------------------------------------------------------------------------
// Vertex sets
// ---------------------------------------------------------------------------

using VertexId = int;

/// Maximum supported ground-set size: vertex sets live in one machine word.
inline constexpr int kMaxVertices = 64;

/// A set of vertices over a ground set of at most 64 elements, as a bit mask.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static VertexSet of(std::initializer_list<VertexId> vs) {
    VertexSet s;
    for (VertexId v : vs) s.insert(v);
    return s;
  }

  static constexpr VertexSet single(VertexId v) { return VertexSet(std::uint64_t{1} << v); }

  /// The full set {0, ..., n-1}.
  static constexpr VertexSet full(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return __builtin_popcountll(bits_); }
  constexpr bool contains(VertexId v) const { return (bits_ >> v) & 1; }
  constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

  void insert(VertexId v) { bits_ |= std::uint64_t{1} << v; }
  void erase(VertexId v) { bits_ &= ~(std::uint64_t{1} << v); }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }

  friend constexpr bool operator==(VertexSet a, VertexSet b) { return a.bits_ == b.bits_; }
  friend constexpr bool operator!=(VertexSet a, VertexSet b) { return a.bits_ != b.bits_; }

  /// Numeric mask order; not the canonical edge order (see edge_less).
  friend constexpr bool operator<(VertexSet a, VertexSet b) { return a.bits_ < b.bits_; }

  int lowest() const { return __builtin_ctzll(bits_); }

  /// Calls f(v) for every member, ascending.
  template <class F>
  void for_each(F&& f) const {
    for (std::uint64_t b = bits_; b;) {
      int v = __builtin_ctzll(b);
      f(v);
      b &= b - 1;
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(size());
    for_each([&](int v) { out.push_back(v); });
    return out;
  }

 private:
  std::uint64_t bits_ = 0;
};

/// Canonical edge order: by cardinality, then lexicographic on the sorted
/// vertex lists. For equal sizes the lexicographically smaller set is the one
/// owning the lowest bit where the two sets differ.
inline bool edge_less(VertexSet a, VertexSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  if (a == b) return false;
  std::uint64_t d = a.bits() ^ b.bits();
  std::uint64_t low = d & (~d + 1);
  return (a.bits() & low) != 0;
}

inline void canonical_sort_edges(std::vector<VertexSet>& edges) {
  std::sort(edges.begin(), edges.end(), edge_less);
}

// ---------------------------------------------------------------------------
// Hypergraphs
// ---------------------------------------------------------------------------

/// A hypergraph whose edge list may contain duplicates and nested edges.
/// Every edge is nonempty and within range; nothing else is promised.
struct GeneralHypergraph {
  int n = 0;
  std::vector<VertexSet> edges;
};

/// A simple hypergraph: distinct nonempty edges forming an antichain, kept in
/// canonical order (by size, then lexicographic).
struct SimpleHypergraph {
  int n = 0;
  std::vector<VertexSet> edges;

  int edge_count() const { return static_cast<int>(edges.size()); }
  VertexSet vertices() const { return VertexSet::full(n); }

  friend bool operator==(const SimpleHypergraph& a, const SimpleHypergraph& b) {
    return a.n == b.n && a.edges == b.edges;
  }
};

/// Maps old vertex labels to compacted new ones after vertices were dropped.
struct Relabeling {
  std::vector<int> old_to_new;  // -1 where the vertex was removed
  std::vector<int> new_to_old;

  static Relabeling identity(int n) {
    Relabeling r;
    r.old_to_new.resize(n);
    r.new_to_old.resize(n);
    for (int i = 0; i < n; ++i) r.old_to_new[i] = r.new_to_old[i] = i;
    return r;
  }

  /// Relabeling that keeps exactly the vertices of `kept` (ground size n).
  static Relabeling keeping(int n, VertexSet kept) {
    Relabeling r;
    r.old_to_new.assign(n, -1);
    kept.for_each([&](int v) {
      r.old_to_new[v] = static_cast<int>(r.new_to_old.size());
      r.new_to_old.push_back(v);
    });
    return r;
  }

  /// Image of a set of old labels; every member must survive.
  VertexSet forward(VertexSet old_labels) const {
    VertexSet out;
    old_labels.for_each([&](int v) { out.insert(old_to_new.at(v)); });
    return out;
  }

  /// Preimage of a set of new labels.
  VertexSet backward(VertexSet new_labels) const {
    VertexSet out;
    new_labels.for_each([&](int v) { out.insert(new_to_old.at(v)); });
    return out;
  }
};

namespace detail {

inline void check_ground_size(int n) {
  if (n < 0 || n > kMaxVertices)
    fail(Errc::too_large, "ground set size " + std::to_string(n) + " outside [0, 64]");
}

inline void check_edge_in_range(VertexSet e, int n, Errc code) {
  if (e.empty()) fail(Errc::empty_edge, "edge is empty");
  if (!e.subset_of(VertexSet::full(n)))
    fail(code, "edge uses a vertex >= ground size " + std::to_string(n));
}

}  // namespace detail

/// Validates and canonicalizes a simple hypergraph.
inline SimpleHypergraph build_simple(int n, std::vector<VertexSet> edges) {
  detail::check_ground_size(n);
  for (VertexSet e : edges) detail::check_edge_in_range(e, n, Errc::out_of_range);
  canonical_sort_edges(edges);
  for (std::size_t i = 0; i + 1 < edges.size(); ++i)
    if (edges[i] == edges[i + 1]) fail(Errc::duplicate_edge, "repeated edge in edge list");
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = 0; j < edges.size(); ++j)
      if (i != j && edges[i].subset_of(edges[j]))
        fail(Errc::not_antichain, "one edge contains another");
  return SimpleHypergraph{n, std::move(edges)};
}

inline SimpleHypergraph build_simple(int n, const std::vector<std::vector<int>>& edges) {
  std::vector<VertexSet> sets;
  sets.reserve(edges.size());
  for (const auto& e : edges) {
    VertexSet s;
    for (int v : e) {
      if (v < 0 || v >= kMaxVertices) fail(Errc::out_of_range, "vertex label outside [0, 64)");
      s.insert(v);
    }
    sets.push_back(s);
  }
  return build_simple(n, std::move(sets));
}

inline GeneralHypergraph build_general(int n, std::vector<VertexSet> edges) {
  detail::check_ground_size(n);
  for (VertexSet e : edges) detail::check_edge_in_range(e, n, Errc::out_of_range);
  return GeneralHypergraph{n, std::move(edges)};
}

/// Keeps exactly the inclusion-minimal edges, deduplicated.
inline SimpleHypergraph minimalize(const GeneralHypergraph& g) {
  std::vector<VertexSet> keep;
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < g.edges.size() && minimal; ++j) {
      if (i == j) continue;
      if (g.edges[j].subset_of(g.edges[i]) && g.edges[j] != g.edges[i]) minimal = false;
      if (g.edges[j] == g.edges[i] && j < i) minimal = false;  // dedup: first copy wins
    }
    if (minimal) keep.push_back(g.edges[i]);
  }
  canonical_sort_edges(keep);
  return SimpleHypergraph{g.n, std::move(keep)};
}

struct DeletionResult {
  SimpleHypergraph hypergraph;
  Relabeling relabeling;
};

/// Removes x and every edge through it; surviving labels are compacted.
inline DeletionResult delete_vertex(const SimpleHypergraph& h, VertexId x) {
  if (x < 0 || x >= h.n) fail(Errc::bad_vertex, "vertex " + std::to_string(x));
  Relabeling map = Relabeling::keeping(h.n, h.vertices() - VertexSet::single(x));
  std::vector<VertexSet> edges;
  for (VertexSet e : h.edges)
    if (!e.contains(x)) edges.push_back(map.forward(e));
  canonical_sort_edges(edges);
  return DeletionResult{SimpleHypergraph{h.n - 1, std::move(edges)}, std::move(map)};
}

struct ContractionResult {
  SimpleHypergraph hypergraph;
  Relabeling relabeling;
  /// True when some edge was exactly {x}: its contraction candidate is empty
  /// and gets dropped rather than rejected.
  bool dropped_singleton_edge = false;
};

/// Removes x from every edge and keeps the nonempty inclusion-minimal results.
inline ContractionResult contract_vertex(const SimpleHypergraph& h, VertexId x) {
  if (x < 0 || x >= h.n) fail(Errc::bad_vertex, "vertex " + std::to_string(x));
  Relabeling map = Relabeling::keeping(h.n, h.vertices() - VertexSet::single(x));
  bool dropped = false;
  std::vector<VertexSet> candidates;
  for (VertexSet e : h.edges) {
    VertexSet c = e - VertexSet::single(x);
    if (c.empty()) {
      dropped = true;
      continue;
    }
    candidates.push_back(map.forward(c));
  }
  SimpleHypergraph out = minimalize(GeneralHypergraph{h.n - 1, std::move(candidates)});
  return ContractionResult{std::move(out), std::move(map), dropped};
}

struct GeneralSection {
  GeneralHypergraph hypergraph;
  Relabeling relabeling;
  /// Surviving original edge indices, aligned with hypergraph.edges.
  std::vector<int> edge_origin;
};

/// Edges E_i ∩ A (nonempty ones, original multiplicity) on ground set A.
inline GeneralSection subhypergraph(const SimpleHypergraph& h, VertexSet a) {
  if (!a.subset_of(h.vertices())) fail(Errc::bad_vertex_set, "A is not a subset of the ground set");
  Relabeling map = Relabeling::keeping(h.n, a);
  GeneralSection out;
  for (int i = 0; i < h.edge_count(); ++i) {
    VertexSet cut = h.edges[i] & a;
    if (cut.empty()) continue;
    out.hypergraph.edges.push_back(map.forward(cut));
    out.edge_origin.push_back(i);
  }
  out.hypergraph.n = a.size();
  out.relabeling = std::move(map);
  return out;
}

struct SimpleSection {
  SimpleHypergraph hypergraph;
  Relabeling relabeling;
  std::vector<int> edge_origin;
};

/// Edges entirely inside A, on ground set A.
inline SimpleSection vertex_section(const SimpleHypergraph& h, VertexSet a) {
  if (!a.subset_of(h.vertices())) fail(Errc::bad_vertex_set, "A is not a subset of the ground set");
  Relabeling map = Relabeling::keeping(h.n, a);
  SimpleSection out;
  for (int i = 0; i < h.edge_count(); ++i) {
    if (!h.edges[i].subset_of(a)) continue;
    out.hypergraph.edges.push_back(map.forward(h.edges[i]));
    out.edge_origin.push_back(i);
  }
  out.hypergraph.n = a.size();
  out.relabeling = std::move(map);
  return out;
}

namespace detail {

inline std::vector<int> checked_index_set(const SimpleHypergraph& h, std::vector<int> indices) {
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  for (int j : indices)
    if (j < 0 || j >= h.edge_count()) fail(Errc::bad_edge_index, "edge index " + std::to_string(j));
  return indices;
}

}  // namespace detail

/// Keeps the full vertex set and only the edges indexed by J.
inline SimpleHypergraph partial_hypergraph(const SimpleHypergraph& h, std::vector<int> indices) {
  indices = detail::checked_index_set(h, std::move(indices));
  std::vector<VertexSet> edges;
  edges.reserve(indices.size());
  for (int j : indices) edges.push_back(h.edges[j]);
  return SimpleHypergraph{h.n, std::move(edges)};
}

/// Keeps the edges indexed by J on the union of their vertices.
inline SimpleSection edge_section(const SimpleHypergraph& h, std::vector<int> indices) {
  indices = detail::checked_index_set(h, std::move(indices));
  if (indices.empty()) fail(Errc::empty_index_set, "edge section needs a nonempty index set");
  VertexSet support;
  for (int j : indices) support |= h.edges[j];
  Relabeling map = Relabeling::keeping(h.n, support);
  SimpleSection out;
  for (int j : indices) {
    out.hypergraph.edges.push_back(map.forward(h.edges[j]));
    out.edge_origin.push_back(j);
  }
  canonical_sort_edges(out.hypergraph.edges);
  out.hypergraph.n = support.size();
  out.relabeling = std::move(map);
  return out;
}

/// Common edge size d, if H is d-uniform; absent for edgeless or mixed sizes.
inline std::optional<int> uniformity(const SimpleHypergraph& h) {
  if (h.edges.empty()) return std::nullopt;
  int d = h.edges.front().size();
  for (VertexSet e : h.edges)
    if (e.size() != d) return std::nullopt;
  return d;
}

inline VertexSet isolated_vertices(const SimpleHypergraph& h) {
  VertexSet covered;
  for (VertexSet e : h.edges) covered |= e;
  return h.vertices() - covered;
}

/// True when H is d-uniform and distinct intersecting edges always meet in
/// exactly d-1 vertices. Vacuously true for at most one edge.
inline bool has_linear_d_intersections(const SimpleHypergraph& h) {
  if (h.edge_count() <= 1) return true;
  std::optional<int> d = uniformity(h);
  if (!d) return false;
  for (int i = 0; i < h.edge_count(); ++i)
    for (int j = i + 1; j < h.edge_count(); ++j) {
      VertexSet meet = h.edges[i] & h.edges[j];
      if (!meet.empty() && meet.size() != *d - 1) return false;
    }
  return true;
}

/// True when the graph on edges with adjacency |E ∩ E'| = d-1 is connected.
/// Requires a uniform hypergraph; edgeless and single-edge cases are true.
inline bool is_strongly_connected(const SimpleHypergraph& h) {
  if (h.edge_count() <= 1) return true;
  std::optional<int> d = uniformity(h);
  if (!d) fail(Errc::not_uniform, "strong connectivity is defined for d-uniform hypergraphs");
  int m = h.edge_count();
  std::vector<char> seen(m, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    for (int j = 0; j < m; ++j) {
      if (seen[j]) continue;
      if ((h.edges[i] & h.edges[j]).size() == *d - 1) {
        seen[j] = 1;
        ++reached;
        stack.push_back(j);
      }
    }
  }
  return reached == m;
}

}  // namespace hyreg
