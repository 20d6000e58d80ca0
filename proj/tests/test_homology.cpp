#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "hyreg/enumerate.hpp"
#include "hyreg/homology.hpp"
#include "hyreg/matching.hpp"

using namespace hyreg;

namespace {

const FieldChar kGf2 = FieldChar::of(2);
const FieldChar kRationals = FieldChar::rationals();

}  // namespace

TEST_CASE("field characteristics validate") {
  REQUIRE(FieldChar::of(0).value == 0);
  REQUIRE(FieldChar::of(7).value == 7);
  REQUIRE_THROWS_AS(FieldChar::of(6), Error);
  REQUIRE_THROWS_AS(FieldChar::of(1), Error);
}

TEST_CASE("triangle boundary is a circle") {
  SimplicialComplex c = independence_complex(fixtures::single_edge(3));
  for (FieldChar f : {kGf2, kRationals, FieldChar::of(3)}) {
    HomologyProfile profile = reduced_homology(c, f);
    REQUIRE(profile.rank(-1) == 0);
    REQUIRE(profile.rank(0) == 0);
    REQUIRE(profile.rank(1) == 1);
  }
}

TEST_CASE("empty-face and void complexes") {
  HomologyProfile empty_face =
      reduced_homology(SimplicialComplex::empty_face_complex(2), kGf2);
  REQUIRE(empty_face.rank(-1) == 1);
  HomologyProfile void_profile = reduced_homology(SimplicialComplex::void_complex(2), kGf2);
  REQUIRE(void_profile.ranks.empty());
}

TEST_CASE("simplex boundaries are spheres") {
  for (int d = 2; d <= 5; ++d) {
    std::vector<VertexSet> facets;
    VertexSet full = VertexSet::full(d);
    for (int v = 0; v < d; ++v) facets.push_back(full - VertexSet::single(v));
    SimplicialComplex sphere{d, facets, false};
    canonical_sort_edges(sphere.facets);
    HomologyProfile profile = reduced_homology(sphere, kRationals);
    for (int t = -1; t <= d - 2; ++t) REQUIRE(profile.rank(t) == (t == d - 2 ? 1 : 0));
  }
}

TEST_CASE("projective plane homology depends on the field") {
  SimplicialComplex rp2 = independence_complex(fixtures::projective_plane_nonfaces());
  REQUIRE(rp2.facets.size() == 10);
  HomologyProfile mod2 = reduced_homology(rp2, kGf2);
  REQUIRE(mod2.rank(0) == 0);
  REQUIRE(mod2.rank(1) == 1);
  REQUIRE(mod2.rank(2) == 1);
  HomologyProfile rational = reduced_homology(rp2, kRationals);
  REQUIRE(rational.rank(0) == 0);
  REQUIRE(rational.rank(1) == 0);
  REQUIRE(rational.rank(2) == 0);
  HomologyProfile mod3 = reduced_homology(rp2, FieldChar::of(3));
  REQUIRE(mod3.rank(1) == 0);
  REQUIRE(mod3.rank(2) == 0);
}

TEST_CASE("cones over isolated vertices are acyclic") {
  SimpleHypergraph h = build_simple(5, std::vector<std::vector<int>>{{0, 1}, {1, 2}});
  HomologyProfile profile = reduced_homology(independence_complex(h), kGf2);
  for (auto& [t, r] : profile.ranks) REQUIRE(r == 0);
}

TEST_CASE("betti tables of basic examples") {
  for (int d = 2; d <= 4; ++d) {
    BettiTable t = betti_table(fixtures::single_edge(d), kGf2);
    REQUIRE(t.entries.size() == 2);
    REQUIRE(t.at(0, 0) == 1);
    REQUIRE(t.at(1, d) == 1);
    REQUIRE(t.regularity() == d - 1);
  }

  BettiTable k3 = betti_table(fixtures::triangle(), kRationals);
  REQUIRE(k3.at(0, 0) == 1);
  REQUIRE(k3.at(1, 2) == 3);
  REQUIRE(k3.at(2, 3) == 2);
  REQUIRE(k3.entries.size() == 3);

  BettiTable chain = betti_table(fixtures::triple_chain(), kGf2);
  REQUIRE(chain.at(0, 0) == 1);
  REQUIRE(chain.at(1, 3) == 3);
  REQUIRE(chain.at(2, 4) == 1);
  REQUIRE(chain.at(2, 5) == 1);
  REQUIRE(chain.entries.size() == 4);
  REQUIRE(chain.regularity() == 3);
}

TEST_CASE("regularity of the named examples") {
  REQUIRE(regularity(fixtures::pentagon(), kGf2) == 2);
  REQUIRE(regularity(fixtures::star(), kGf2) == 1);
  REQUIRE(regularity(fixtures::single_edge(3), kGf2) == 2);
  REQUIRE(regularity(SimpleHypergraph{3, {}}, kGf2) == 0);
  REQUIRE(regularity(fixtures::triple_chain(), kGf2) == 3);
}

TEST_CASE("projective plane regularity depends on the characteristic") {
  SimpleHypergraph h = fixtures::projective_plane_nonfaces();
  REQUIRE(regularity(h, kGf2) == 3);
  REQUIRE(regularity(h, kRationals) == 2);
}

TEST_CASE("the size ceiling guards the subset loop") {
  SimpleHypergraph big{17, {}};
  REQUIRE_THROWS_AS(betti_table(big, kGf2), Error);
  REQUIRE_THROWS_AS(recursion_gap(fixtures::star(), 9, kGf2), Error);
}

TEST_CASE("recursion gap on basic examples") {
  RecursionGap gap = recursion_gap(fixtures::single_edge(3), 0, kGf2);
  REQUIRE(gap.lhs == 2);
  REQUIRE(gap.rhs == 2);

  RecursionGap star_gap = recursion_gap(fixtures::star(), 0, kGf2);
  REQUIRE(star_gap.lhs == 1);
  REQUIRE(star_gap.lhs <= star_gap.rhs);
}

TEST_CASE("homology invariants across all small hypergraphs") {
  EnumerationOptions opts;
  enumerate_labeled_antichains(5, 6, opts, [&](const SimpleHypergraph& h) {
    SimplicialComplex c = independence_complex(h);
    for (FieldChar f : {kGf2, kRationals}) {
      HomologyProfile profile = reduced_homology(c, f);
      long long alternating = 0;
      for (auto& [t, r] : profile.ranks) alternating += (t % 2 == 0) ? r : -r;
      REQUIRE(alternating == oracles::reduced_euler_by_faces(h));
    }
    // Degree-(1, j) entries count the edges of each size.
    BettiTable table = betti_table(h, kGf2);
    std::map<int, long long> by_size;
    for (VertexSet e : h.edges) ++by_size[e.size()];
    for (auto& [j, count] : by_size) REQUIRE(table.at(1, j) == count);
    for (auto& [ij, r] : table.entries) {
      if (ij.first == 1) REQUIRE(r == by_size[ij.second]);
      REQUIRE(r >= 0);
      REQUIRE(ij.second >= ij.first);
    }
  });
}

TEST_CASE("homology ranks are relabeling invariants") {
  std::mt19937_64 rng(99);
  EnumerationOptions opts;
  enumerate_labeled_antichains(5, 4, opts, [&](const SimpleHypergraph& h) {
    if (rng() % 31 != 0) return;  // sample
    std::vector<int> perm(h.n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<VertexSet> relabeled;
    for (VertexSet e : h.edges) {
      VertexSet image;
      e.for_each([&](int v) { image.insert(perm[v]); });
      relabeled.push_back(image);
    }
    SimpleHypergraph g = build_simple(h.n, relabeled);
    REQUIRE(reduced_homology(independence_complex(h), kGf2).ranks ==
            reduced_homology(independence_complex(g), kGf2).ranks);
    REQUIRE(regularity(h, kRationals) == regularity(g, kRationals));
  });
}

TEST_CASE("rational ranks never exceed prime-field ranks") {
  // Universal coefficients: torsion can only raise ranks over a prime field.
  // This plays the fraction-free elimination against the modular one.
  auto check = [](const SimplicialComplex& c) {
    HomologyProfile rational = reduced_homology(c, kRationals);
    for (int p : {2, 3, 5}) {
      HomologyProfile modular = reduced_homology(c, FieldChar::of(p));
      for (auto& [t, r] : rational.ranks) REQUIRE(r <= modular.rank(t));
    }
  };
  enumerate_hypergraphs(5, 10, {}, [&](const SimpleHypergraph& h) {
    check(independence_complex(h));
  });
  check(independence_complex(fixtures::projective_plane_nonfaces()));
}

TEST_CASE("generator counts survive on random seven and eight vertex inputs") {
  GeneratorConfig cfg;
  cfg.min_edge_size = 2;
  cfg.max_edge_size = 4;
  cfg.prob_num = 1;
  cfg.prob_den = 8;
  for (int n : {7, 8}) {
    cfg.n = n;
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
      cfg.seed = 1000 * n + seed;
      SimpleHypergraph h = random_hypergraph(cfg);
      BettiTable table = betti_table(h, kGf2);
      std::map<int, long long> by_size;
      for (VertexSet e : h.edges) ++by_size[e.size()];
      for (auto& [j, count] : by_size) REQUIRE(table.at(1, j) == count);
    }
  }
}

TEST_CASE("the induced matching number bounds regularity in both characteristics") {
  enumerate_hypergraphs(4, 8, {}, [&](const SimpleHypergraph& h) {
    int c = induced_matching_number(h).weight;
    REQUIRE(c <= regularity(h, kGf2));
    REQUIRE(c <= regularity(h, kRationals));
  });
}

TEST_CASE("deleting an isolated vertex keeps the regularity") {
  SimpleHypergraph h = build_simple(5, std::vector<std::vector<int>>{{0, 1}, {1, 2}});
  REQUIRE(isolated_vertices(h).contains(4));
  REQUIRE(regularity(delete_vertex(h, 4).hypergraph, kGf2) == regularity(h, kGf2));
}

TEST_CASE("recursion inequality holds empirically") {
  EnumerationOptions opts;
  enumerate_labeled_antichains(4, 6, opts, [&](const SimpleHypergraph& h) {
    for (int x = 0; x < h.n; ++x) {
      RecursionGap gap = recursion_gap(h, x, kGf2);
      REQUIRE(gap.lhs <= gap.rhs);
    }
  });
}
