#pragma once

#include <string>
#include <vector>

#include "hyreg/hypergraph.hpp"

namespace hyreg {

enum class FamilyKind { matching, semi_induced, induced, two_collage };

inline const char* family_kind_name(FamilyKind k) {
  switch (k) {
    case FamilyKind::matching: return "matching";
    case FamilyKind::semi_induced: return "semi_induced";
    case FamilyKind::induced: return "induced";
    case FamilyKind::two_collage: return "two_collage";
  }
  return "?";
}

/// An edge family witnessing one of the matching invariants. The weight is
/// |union of the edges| - family size (meaningless for two_collage, kept 0).
struct MatchingCertificate {
  FamilyKind kind = FamilyKind::matching;
  std::vector<int> indices;
  int weight = 0;

  bool empty() const { return indices.empty(); }
};

namespace detail {

inline std::vector<int> checked_family(const SimpleHypergraph& h, std::vector<int> indices) {
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  for (int i : indices)
    if (i < 0 || i >= h.edge_count()) fail(Errc::bad_edge_index, "edge index " + std::to_string(i));
  return indices;
}

inline VertexSet family_union(const SimpleHypergraph& h, const std::vector<int>& indices) {
  VertexSet u;
  for (int i : indices) u |= h.edges[i];
  return u;
}

}  // namespace detail

inline int family_weight(const SimpleHypergraph& h, const std::vector<int>& indices) {
  return detail::family_union(h, indices).size() - static_cast<int>(indices.size());
}

/// Pairwise disjoint edges.
inline bool is_matching(const SimpleHypergraph& h, std::vector<int> indices) {
  indices = detail::checked_family(h, std::move(indices));
  VertexSet seen;
  for (int i : indices) {
    if (h.edges[i].intersects(seen)) return false;
    seen |= h.edges[i];
  }
  return true;
}

/// The only edges of H inside the family's union are the family members.
inline bool is_semi_induced(const SimpleHypergraph& h, std::vector<int> indices) {
  indices = detail::checked_family(h, std::move(indices));
  VertexSet u = detail::family_union(h, indices);
  std::size_t next = 0;
  for (int e = 0; e < h.edge_count(); ++e) {
    while (next < indices.size() && indices[next] < e) ++next;
    bool member = next < indices.size() && indices[next] == e;
    if (!member && h.edges[e].subset_of(u)) return false;
  }
  return true;
}

/// Semi-induced and pairwise disjoint.
inline bool is_induced(const SimpleHypergraph& h, const std::vector<int>& indices) {
  return is_matching(h, indices) && is_semi_induced(h, indices);
}

/// Replays a certificate: predicate holds and the recorded weight matches.
inline bool verify_certificate(const SimpleHypergraph& h, const MatchingCertificate& cert);

namespace detail {

// Maximizes |union| - k over edge families of the requested kind. Families
// are explored by ascending edge index; ties prefer smaller families, then
// the lexicographically least index set (which depth-first order delivers
// for families of equal size).
struct FamilySearch {
  const SimpleHypergraph& h;
  bool require_disjoint;
  bool require_semi_induced;

  int best_weight = -1;
  std::vector<int> best_indices;
  std::vector<int> chosen;

  bool improves(int weight, int k) const {
    if (best_weight < 0) return true;
    if (weight != best_weight) return weight > best_weight;
    return k < static_cast<int>(best_indices.size());
  }

  // Could any extension with at least k edges still win?
  bool worth_extending(int k) const {
    if (best_weight < 0) return true;
    int cap = h.n - k;
    if (cap > best_weight) return true;
    return cap == best_weight && k < static_cast<int>(best_indices.size());
  }

  void run() {
    chosen.clear();
    extend(0, VertexSet{});
  }

  void extend(int pos, VertexSet u) {
    if (!worth_extending(static_cast<int>(chosen.size()) + 1)) return;
    for (int e = pos; e < h.edge_count(); ++e) {
      if (require_disjoint && h.edges[e].intersects(u)) continue;
      VertexSet u2 = u | h.edges[e];
      chosen.push_back(e);
      const int k = static_cast<int>(chosen.size());

      bool valid = true;  // family itself admissible
      bool dead = false;  // no descendant can become admissible
      if (require_semi_induced) {
        std::size_t next = 0;
        for (int f = 0; f < h.edge_count() && !dead; ++f) {
          while (next < chosen.size() && chosen[next] < f) ++next;
          bool member = next < chosen.size() && chosen[next] == f;
          if (member || !h.edges[f].subset_of(u2)) continue;
          valid = false;
          // A violating edge below the cursor can never be added later; for
          // disjoint families it can never be added at all.
          if (require_disjoint || f <= e) dead = true;
        }
      }
      if (valid) {
        int weight = u2.size() - k;
        if (improves(weight, k)) {
          best_weight = weight;
          best_indices = chosen;
        }
      }
      if (!dead) extend(e + 1, u2);
      chosen.pop_back();
    }
  }
};

inline MatchingCertificate best_family(const SimpleHypergraph& h, FamilyKind kind) {
  FamilySearch search{h, kind != FamilyKind::semi_induced, kind != FamilyKind::matching, -1, {}, {}};
  search.run();
  MatchingCertificate cert;
  cert.kind = kind;
  if (search.best_weight < 0) return cert;  // edgeless: weight 0, empty family
  cert.indices = std::move(search.best_indices);
  cert.weight = search.best_weight;
  return cert;
}

}  // namespace detail

/// m_H: best weight over matchings, with a maximizing family.
inline MatchingCertificate matching_number(const SimpleHypergraph& h) {
  return detail::best_family(h, FamilyKind::matching);
}

/// c_H: best weight over induced matchings.
inline MatchingCertificate induced_matching_number(const SimpleHypergraph& h) {
  return detail::best_family(h, FamilyKind::induced);
}

/// c'_H: best weight over semi-induced matchings; among optimal families the
/// certificate has the fewest edges (then least index set).
inline MatchingCertificate semi_induced_matching_number(const SimpleHypergraph& h) {
  return detail::best_family(h, FamilyKind::semi_induced);
}

namespace detail {

inline bool covers_as_two_collage(const SimpleHypergraph& h, const std::vector<int>& indices) {
  for (VertexSet e : h.edges) {
    bool covered = false;
    e.for_each([&](int v) {
      if (covered) return;
      VertexSet trimmed = e - VertexSet::single(v);
      for (int c : indices)
        if (trimmed.subset_of(h.edges[c])) {
          covered = true;
          return;
        }
    });
    if (!covered) return false;
  }
  return true;
}

}  // namespace detail

/// True when every edge E of H admits a vertex v with E \ {v} inside some
/// member of the family.
inline bool is_two_collage(const SimpleHypergraph& h, std::vector<int> indices) {
  indices = detail::checked_family(h, std::move(indices));
  return detail::covers_as_two_collage(h, indices);
}

namespace detail {

// Branch and bound over edge subsets. Being a 2-collage is upward closed, so
// once a family qualifies none of its supersets can do better. Singleton
// edges cost 0, so equal-cost descendants exist; ties are cut on family size.
struct CollageSearch {
  const SimpleHypergraph& h;
  long long best_cost = -1;
  std::vector<int> best_indices;
  std::vector<int> chosen;

  void extend(int pos, long long cost) {
    if (best_cost >= 0) {
      if (cost > best_cost) return;
      if (cost == best_cost && chosen.size() >= best_indices.size()) return;
    }
    if (covers_as_two_collage(h, chosen)) {
      if (best_cost < 0 || cost < best_cost ||
          (cost == best_cost && chosen.size() < best_indices.size())) {
        best_cost = cost;
        best_indices = chosen;
      }
      return;
    }
    for (int e = pos; e < h.edge_count(); ++e) {
      chosen.push_back(e);
      extend(e + 1, cost + h.edges[e].size() - 1);
      chosen.pop_back();
    }
  }
};

}  // namespace detail

/// Minimum of sum(|F| - 1) over all 2-collages, with a minimizing family.
/// The full edge set is always a 2-collage, so the minimum exists; an
/// edgeless hypergraph gets 0 via the empty family.
inline MatchingCertificate collage_bound(const SimpleHypergraph& h) {
  detail::CollageSearch search{h, -1, {}, {}};
  search.extend(0, 0);
  MatchingCertificate cert;
  cert.kind = FamilyKind::two_collage;
  cert.indices = std::move(search.best_indices);
  cert.weight = static_cast<int>(search.best_cost < 0 ? 0 : search.best_cost);
  return cert;
}

/// The hypergraph whose edges are the inclusion-minimal unions E ∪ E' over
/// the other edges E' of H.
inline SimpleHypergraph edge_union_closure(const SimpleHypergraph& h, int edge_index) {
  if (h.edge_count() < 2) fail(Errc::too_few_edges, "edge union closure needs at least two edges");
  if (edge_index < 0 || edge_index >= h.edge_count())
    fail(Errc::bad_edge_index, "edge index " + std::to_string(edge_index));
  std::vector<VertexSet> unions;
  for (int i = 0; i < h.edge_count(); ++i)
    if (i != edge_index) unions.push_back(h.edges[edge_index] | h.edges[i]);
  return minimalize(GeneralHypergraph{h.n, std::move(unions)});
}

inline bool verify_certificate(const SimpleHypergraph& h, const MatchingCertificate& cert) {
  switch (cert.kind) {
    case FamilyKind::matching:
      if (!is_matching(h, cert.indices)) return false;
      break;
    case FamilyKind::semi_induced:
      if (!is_semi_induced(h, cert.indices)) return false;
      break;
    case FamilyKind::induced:
      if (!is_induced(h, cert.indices)) return false;
      break;
    case FamilyKind::two_collage:
      return is_two_collage(h, cert.indices);
  }
  return family_weight(h, cert.indices) == cert.weight;
}

}  // namespace hyreg
