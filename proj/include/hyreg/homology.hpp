#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "hyreg/complex.hpp"
#include "hyreg/hypergraph.hpp"

namespace hyreg {

/// Coefficient field for homology: the rationals (0) or a prime field.
struct FieldChar {
  int value = 2;

  static bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
      if (p % d == 0) return false;
    return true;
  }

  static FieldChar of(int value) {
    if (value != 0 && !is_prime(value))
      fail(Errc::config_error, "field characteristic must be 0 or a prime");
    return FieldChar{value};
  }

  static FieldChar rationals() { return FieldChar{0}; }

  friend bool operator==(FieldChar a, FieldChar b) { return a.value == b.value; }
};

/// Ranks of the reduced homology groups, indexed by dimension (from -1 up).
/// The void complex has an empty profile.
struct HomologyProfile {
  std::map<int, long long> ranks;

  long long rank(int t) const {
    auto it = ranks.find(t);
    return it == ranks.end() ? 0 : it->second;
  }

  int top_nonzero() const {  // -2 when everything vanishes
    int best = -2;
    for (auto& [t, r] : ranks)
      if (r > 0) best = std::max(best, t);
    return best;
  }
};

/// Graded Betti numbers of the quotient by the nonface ideal, as a sparse
/// map (homological degree i, internal degree j) -> rank.
struct BettiTable {
  std::map<std::pair<int, int>, long long> entries;
  FieldChar field;

  long long at(int i, int j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
  }

  int regularity() const {
    int best = 0;
    for (auto& [ij, r] : entries)
      if (r > 0) best = std::max(best, ij.second - ij.first);
    return best;
  }
};

namespace detail {

// ----- exact matrix ranks -----

inline long long mod_pow(long long base, long long exp, long long p) {
  long long out = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1) out = out * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return out;
}

inline int rank_mod_p(std::vector<std::vector<long long>> m, long long p) {
  if (m.empty() || m[0].empty()) return 0;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][c] % p != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    long long inv = mod_pow(((m[rank][c] % p) + p) % p, p - 2, p);
    for (int r = rank + 1; r < rows; ++r) {
      long long factor = ((m[r][c] % p) + p) % p * inv % p;
      if (factor == 0) continue;
      for (int j = c; j < cols; ++j)
        m[r][j] = ((m[r][j] - factor * m[rank][j]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

// Fraction-free (Bareiss) elimination; all divisions are exact.
inline int rank_exact(std::vector<std::vector<boost::multiprecision::cpp_int>> m) {
  using Int = boost::multiprecision::cpp_int;
  if (m.empty() || m[0].empty()) return 0;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int rank = 0;
  Int prev = 1;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][c] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    const Int& piv = m[rank][c];
    for (int r = rank + 1; r < rows; ++r) {
      for (int j = c + 1; j < cols; ++j) m[r][j] = (m[r][j] * piv - m[r][c] * m[rank][j]) / prev;
      m[r][c] = 0;
    }
    prev = piv;
    ++rank;
  }
  return rank;
}

// ----- boundary ranks of a face list -----

/// Faces as bit masks, any order, downward closed, possibly empty (void).
inline HomologyProfile homology_of_faces(std::vector<std::uint64_t> faces, FieldChar field) {
  HomologyProfile profile;
  if (faces.empty()) return profile;  // void complex
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());

  int top_card = 0;
  for (std::uint64_t f : faces) top_card = std::max(top_card, __builtin_popcountll(f));
  std::vector<std::vector<std::uint64_t>> by_card(top_card + 1);
  for (std::uint64_t f : faces) by_card[__builtin_popcountll(f)].push_back(f);  // stays sorted

  // boundary_rank[k] = rank of the map from k-element faces to (k-1)-element
  // faces; index k runs 1..top_card.
  std::vector<int> boundary_rank(top_card + 2, 0);
  for (int k = 1; k <= top_card; ++k) {
    const auto& source = by_card[k];
    const auto& target = by_card[k - 1];
    if (source.empty() || target.empty()) continue;
    std::vector<std::vector<long long>> matrix(target.size(),
                                               std::vector<long long>(source.size(), 0));
    for (std::size_t col = 0; col < source.size(); ++col) {
      std::uint64_t f = source[col];
      int position = 0;
      for (std::uint64_t rest = f; rest; rest &= rest - 1, ++position) {
        std::uint64_t sub = f & ~(rest & (~rest + 1));
        auto it = std::lower_bound(target.begin(), target.end(), sub);
        std::size_t row = static_cast<std::size_t>(it - target.begin());
        matrix[row][col] = (position % 2 == 0) ? 1 : -1;
      }
    }
    if (field.value == 0) {
      std::vector<std::vector<boost::multiprecision::cpp_int>> exact(matrix.size());
      for (std::size_t r = 0; r < matrix.size(); ++r)
        exact[r].assign(matrix[r].begin(), matrix[r].end());
      boundary_rank[k] = rank_exact(std::move(exact));
    } else {
      boundary_rank[k] = rank_mod_p(std::move(matrix), field.value);
    }
  }

  for (int k = 0; k <= top_card; ++k) {
    long long chain_dim = static_cast<long long>(by_card[k].size());
    long long rank = chain_dim - boundary_rank[k] - boundary_rank[k + 1];
    if (rank < 0)
      throw std::logic_error("boundary ranks exceed a chain dimension; rank computation is broken");
    profile.ranks[k - 1] = rank;
  }
  return profile;
}

inline std::vector<std::uint64_t> faces_of_complex(const SimplicialComplex& c) {
  std::vector<std::uint64_t> faces;
  if (c.is_void()) return faces;
  for (VertexSet facet : c.facets) {
    std::uint64_t f = facet.bits();
    std::uint64_t s = f;
    while (true) {
      faces.push_back(s);
      if (s == 0) break;
      s = (s - 1) & f;
    }
  }
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  return faces;
}

}  // namespace detail

/// Exact reduced homology over the chosen field.
inline HomologyProfile reduced_homology(const SimplicialComplex& c, FieldChar field) {
  return detail::homology_of_faces(detail::faces_of_complex(c), field);
}

inline constexpr int kDefaultBettiCeiling = 16;

/// Betti table of the quotient by the edge ideal, assembled from the reduced
/// homology of all induced subcomplexes of the independence complex: a
/// subset W of size j contributes its (j-i-1)-dimensional homology rank to
/// the (i, j) entry. Subsets that are faces have no reduced homology except
/// for the empty set, which contributes the constant (0, 0) entry.
inline BettiTable betti_table(const SimpleHypergraph& h, FieldChar field,
                              int max_ground = kDefaultBettiCeiling) {
  if (h.n > max_ground || h.n > kMaxComplexGround)
    fail(Errc::too_large,
         "Betti table enumeration over 2^" + std::to_string(h.n) + " subsets exceeds the ceiling");
  BettiTable table;
  table.field = field;
  table.entries[{0, 0}] = 1;
  std::vector<char> independent = detail::independence_bitmap(h);
  const std::uint64_t limit = std::uint64_t{1} << h.n;
  std::vector<std::uint64_t> faces;
  for (std::uint64_t w = 1; w < limit; ++w) {
    if (independent[w]) continue;  // the induced subcomplex is a full simplex
    faces.clear();
    std::uint64_t s = w;
    while (true) {
      if (independent[s]) faces.push_back(s);
      if (s == 0) break;
      s = (s - 1) & w;
    }
    HomologyProfile profile = detail::homology_of_faces(faces, field);
    int j = __builtin_popcountll(w);
    for (auto& [t, r] : profile.ranks)
      if (r > 0) table.entries[{j - t - 1, j}] += r;
  }
  return table;
}

/// Castelnuovo-Mumford regularity: max of j - i over nonzero Betti entries.
inline int regularity(const SimpleHypergraph& h, FieldChar field,
                      int max_ground = kDefaultBettiCeiling) {
  return betti_table(h, field, max_ground).regularity();
}

struct RecursionGap {
  int lhs = 0;  // regularity of H
  int rhs = 0;  // max(reg of deletion, reg of contraction + 1)
};

/// Both sides of the deletion/contraction regularity inequality at x.
inline RecursionGap recursion_gap(const SimpleHypergraph& h, VertexId x, FieldChar field,
                                  int max_ground = kDefaultBettiCeiling) {
  if (x < 0 || x >= h.n) fail(Errc::bad_vertex, "vertex " + std::to_string(x));
  RecursionGap gap;
  gap.lhs = regularity(h, field, max_ground);
  int del = regularity(delete_vertex(h, x).hypergraph, field, max_ground);
  int contr = regularity(contract_vertex(h, x).hypergraph, field, max_ground);
  gap.rhs = std::max(del, contr + 1);
  return gap;
}

}  // namespace hyreg
