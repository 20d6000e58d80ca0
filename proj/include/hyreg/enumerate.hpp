#pragma once

#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "hyreg/hypergraph.hpp"

namespace hyreg {

/// Ceiling for brute-force canonicalization over all vertex permutations.
inline constexpr int kMaxCanonicalVertices = 8;

/// Edge masks of the lexicographically least relabeling of a hypergraph:
/// isomorphic hypergraphs share the form.
struct CanonicalForm {
  int n = 0;
  std::vector<std::uint64_t> edges;

  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
    return a.n == b.n && a.edges == b.edges;
  }
  friend bool operator<(const CanonicalForm& a, const CanonicalForm& b) {
    if (a.n != b.n) return a.n < b.n;
    return a.edges < b.edges;
  }
};

namespace detail {

inline bool edge_list_less(const std::vector<VertexSet>& a, const std::vector<VertexSet>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), edge_less);
}

/// Remap tables for all permutations of [0, n): table[p][mask] is the image
/// of the vertex set `mask` under permutation p. Built once per ground size.
struct PermutationTables {
  std::vector<std::vector<std::uint16_t>> remap;  // [perm][mask], masks < 2^n

  explicit PermutationTables(int n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    const int mask_count = 1 << n;
    do {
      std::vector<std::uint16_t> table(mask_count);
      for (int mask = 1; mask < mask_count; ++mask) {
        int low = __builtin_ctz(mask);
        table[mask] = table[mask & (mask - 1)] | static_cast<std::uint16_t>(1 << perm[low]);
      }
      remap.push_back(std::move(table));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  template <int N>
  static const PermutationTables& instance() {
    static const PermutationTables table(N);
    return table;
  }

  static const PermutationTables& for_ground(int n) {
    switch (n) {
      case 0: return instance<0>();
      case 1: return instance<1>();
      case 2: return instance<2>();
      case 3: return instance<3>();
      case 4: return instance<4>();
      case 5: return instance<5>();
      case 6: return instance<6>();
      case 7: return instance<7>();
      default: return instance<8>();
    }
  }
};

/// Least relabeled edge list over all vertex permutations (n <= 8).
inline std::vector<VertexSet> least_relabeling(int n, const std::vector<VertexSet>& edges) {
  const PermutationTables& tables = PermutationTables::for_ground(n);
  std::vector<VertexSet> best;
  std::vector<VertexSet> image(edges.size());
  for (const auto& table : tables.remap) {
    for (std::size_t i = 0; i < edges.size(); ++i)
      image[i] = VertexSet(table[edges[i].bits()]);
    canonical_sort_edges(image);
    if (best.empty() && !edges.empty()) {
      best = image;
    } else if (edge_list_less(image, best)) {
      best = image;
    }
  }
  if (edges.empty()) best.clear();
  return best;
}

}  // namespace detail

inline CanonicalForm canonical_form(const SimpleHypergraph& h) {
  if (h.n > kMaxCanonicalVertices)
    fail(Errc::too_large, "canonical forms are computed for at most 8 vertices");
  CanonicalForm form;
  form.n = h.n;
  for (VertexSet e : detail::least_relabeling(h.n, h.edges)) form.edges.push_back(e.bits());
  return form;
}

/// Number of vertex permutations fixing the edge set (n <= 8).
inline long long automorphism_count(const SimpleHypergraph& h) {
  if (h.n > kMaxCanonicalVertices)
    fail(Errc::too_large, "automorphism counting is capped at 8 vertices");
  const auto& tables = detail::PermutationTables::for_ground(h.n);
  long long count = 0;
  std::vector<VertexSet> image(h.edges.size());
  for (const auto& table : tables.remap) {
    for (std::size_t i = 0; i < h.edges.size(); ++i)
      image[i] = VertexSet(table[h.edges[i].bits()]);
    canonical_sort_edges(image);
    if (image == h.edges) ++count;
  }
  return count;
}

struct EnumerationOptions {
  int min_edge_size = 1;
  int max_edge_size = kMaxVertices;
  /// Optional pruning predicate; must be preserved by removing edges.
  std::function<bool(const SimpleHypergraph&)> hereditary_filter;
};

/// Streams every labeled simple hypergraph on exactly `n` vertices with at
/// most `m_max` edges, in a fixed depth-first order. No isomorphism
/// reduction.
template <class Emit>
void enumerate_labeled_antichains(int n, int m_max, const EnumerationOptions& opts, Emit&& emit) {
  if (n > 16) fail(Errc::too_large, "labeled enumeration is capped at 16 vertices");
  const int lo = std::max(1, opts.min_edge_size);
  const int hi = std::min(n, opts.max_edge_size);
  std::vector<VertexSet> chosen;
  const std::uint32_t limit = n >= 31 ? 0 : (1u << n);

  auto passes_filter = [&](const std::vector<VertexSet>& edges) {
    if (!opts.hereditary_filter) return true;
    return opts.hereditary_filter(SimpleHypergraph{n, edges});
  };

  auto rec = [&](auto&& self, std::uint32_t next_mask) -> void {
    emit(SimpleHypergraph{n, chosen});
    if (static_cast<int>(chosen.size()) >= m_max) return;
    for (std::uint32_t m = next_mask; m < limit; ++m) {
      VertexSet e{m};
      int size = e.size();
      if (size < lo || size > hi) continue;
      bool compatible = true;
      for (VertexSet f : chosen)
        if (f.subset_of(e) || e.subset_of(f)) {
          compatible = false;
          break;
        }
      if (!compatible) continue;
      chosen.push_back(e);
      if (passes_filter(chosen))
        self(self, m + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 1);
}

/// Streams one representative per isomorphism class of simple hypergraphs on
/// ground sizes 0..n_max with at most m_max edges: ground size ascending,
/// then edge count, then canonical form. Classes are grown one edge at a
/// time and deduplicated on their canonical form.
template <class Emit>
void enumerate_hypergraphs(int n_max, int m_max, const EnumerationOptions& opts, Emit&& emit) {
  if (n_max > kMaxCanonicalVertices)
    fail(Errc::too_large, "isomorphism-reduced enumeration is capped at 8 vertices");
  for (int n = 0; n <= n_max; ++n) {
    const int lo = std::max(1, opts.min_edge_size);
    const int hi = std::min(n, opts.max_edge_size);
    std::vector<std::vector<VertexSet>> level{{}};
    if (!opts.hereditary_filter || opts.hereditary_filter(SimpleHypergraph{n, {}}))
      emit(SimpleHypergraph{n, {}});
    const std::uint32_t mask_limit = 1u << n;
    for (int depth = 1; depth <= m_max && !level.empty(); ++depth) {
      std::set<std::vector<std::uint64_t>> next;
      for (const auto& rep : level) {
        std::vector<VertexSet> candidate = rep;
        candidate.push_back(VertexSet{});
        for (std::uint32_t m = 1; m < mask_limit; ++m) {
          VertexSet e{m};
          int size = e.size();
          if (size < lo || size > hi) continue;
          bool compatible = true;
          for (VertexSet f : rep)
            if (f == e || f.subset_of(e) || e.subset_of(f)) {
              compatible = false;
              break;
            }
          if (!compatible) continue;
          candidate.back() = e;
          if (opts.hereditary_filter && !opts.hereditary_filter(SimpleHypergraph{n, candidate}))
            continue;
          std::vector<VertexSet> canon = detail::least_relabeling(n, candidate);
          std::vector<std::uint64_t> key(canon.size());
          for (std::size_t i = 0; i < canon.size(); ++i) key[i] = canon[i].bits();
          next.insert(std::move(key));
        }
      }
      level.clear();
      for (const auto& key : next) {
        std::vector<VertexSet> edges(key.size());
        for (std::size_t i = 0; i < key.size(); ++i) edges[i] = VertexSet(key[i]);
        emit(SimpleHypergraph{n, edges});
        level.push_back(std::move(edges));
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Seeded random hypergraphs
// ---------------------------------------------------------------------------

struct GeneratorConfig {
  int n = 0;
  int min_edge_size = 1;
  int max_edge_size = 1;
  /// Inclusion probability as an exact rational in [0, 1].
  std::uint64_t prob_num = 0;
  std::uint64_t prob_den = 1;
  std::uint64_t seed = 0;
};

namespace detail {

inline void check_generator_config(const GeneratorConfig& cfg) {
  if (cfg.n < 0 || cfg.n > kMaxVertices) fail(Errc::config_error, "vertex count outside [0, 64]");
  if (cfg.min_edge_size < 1 || cfg.min_edge_size > cfg.max_edge_size ||
      cfg.max_edge_size > cfg.n)
    fail(Errc::config_error, "edge size range must satisfy 1 <= min <= max <= n");
  if (cfg.prob_den == 0 || cfg.prob_num > cfg.prob_den)
    fail(Errc::config_error, "probability must be a rational in [0, 1]");
  double candidates = 0;
  for (int size = cfg.min_edge_size; size <= cfg.max_edge_size; ++size) {
    double binom = 1;
    for (int i = 0; i < size; ++i) binom = binom * (cfg.n - i) / (i + 1);
    candidates += binom;
  }
  if (candidates > double{1 << 26})
    fail(Errc::config_error, "edge size range spans too many candidate edges");
}

}  // namespace detail

/// Includes each candidate edge of admissible size independently with the
/// configured probability, then minimalizes. The draw compares raw 64-bit
/// generator words against the exact rational, so identical seeds give
/// identical hypergraphs on every platform. Candidate edges are visited by
/// size, then in ascending mask order.
inline SimpleHypergraph random_hypergraph(const GeneratorConfig& cfg) {
  detail::check_generator_config(cfg);
  std::mt19937_64 rng(cfg.seed);
  std::vector<VertexSet> included;
  for (int size = cfg.min_edge_size; size <= cfg.max_edge_size; ++size) {
    std::uint64_t mask = size == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << size) - 1;
    while (true) {
      if (cfg.n < 64 && mask >= (std::uint64_t{1} << cfg.n)) break;
      std::uint64_t u = rng();
      bool include = static_cast<unsigned __int128>(u) * cfg.prob_den <
                     (static_cast<unsigned __int128>(cfg.prob_num) << 64);
      if (include) included.push_back(VertexSet(mask));
      std::uint64_t c = mask & (~mask + 1);
      std::uint64_t r = mask + c;
      if (r < mask || r == 0) break;  // no further mask of this size fits
      mask = (((r ^ mask) >> 2) / c) | r;
    }
  }
  return minimalize(GeneralHypergraph{cfg.n, std::move(included)});
}

}  // namespace hyreg
