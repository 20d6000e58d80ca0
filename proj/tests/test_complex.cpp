#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "hyreg/complex.hpp"
#include "hyreg/enumerate.hpp"

using namespace hyreg;

TEST_CASE("independence complex of a star splits into leaves and center") {
  SimplicialComplex c = independence_complex(fixtures::star());
  REQUIRE(c.facets == std::vector<VertexSet>{VertexSet::of({0}), VertexSet::of({1, 2, 3})});
  REQUIRE(dimension(c) == 2);
}

TEST_CASE("independence complex of one triple is the triangle boundary") {
  SimplicialComplex c = independence_complex(fixtures::single_edge(3));
  REQUIRE(c.facets == std::vector<VertexSet>{VertexSet::of({0, 1}), VertexSet::of({0, 2}),
                                             VertexSet::of({1, 2})});
}

TEST_CASE("pentagon independence complex lists the five far pairs") {
  SimplicialComplex c = independence_complex(fixtures::pentagon());
  REQUIRE(c.facets.size() == 5);
  REQUIRE(c.facets == std::vector<VertexSet>{VertexSet::of({0, 2}), VertexSet::of({0, 3}),
                                             VertexSet::of({1, 3}), VertexSet::of({1, 4}),
                                             VertexSet::of({2, 4})});
}

TEST_CASE("facets match the brute-force oracle on all small hypergraphs") {
  EnumerationOptions opts;
  enumerate_labeled_antichains(5, 6, opts, [&](const SimpleHypergraph& h) {
    SimplicialComplex c = independence_complex(h);
    REQUIRE(is_valid_complex(c));
    REQUIRE(c.facets == oracles::brute_force_facets(h));
  });
}

TEST_CASE("dimension conventions") {
  REQUIRE(dimension(SimplicialComplex::empty_face_complex(3)) == -1);
  REQUIRE_FALSE(dimension(SimplicialComplex::void_complex(3)));
  REQUIRE(dimension(independence_complex(fixtures::triple_chain())) == 3);
}

TEST_CASE("link and deletion behave on the star complex") {
  SimplicialComplex c = independence_complex(fixtures::star());
  SimplicialComplex lk_center = link(c, 0);
  REQUIRE(lk_center.facets == std::vector<VertexSet>{VertexSet{}});
  REQUIRE_FALSE(lk_center.is_void());

  SimplicialComplex lk_leaf = link(c, 1);
  REQUIRE(lk_leaf.facets == std::vector<VertexSet>{VertexSet::of({2, 3})});

  SimplicialComplex del_center = deletion(c, 0);
  REQUIRE(del_center.facets == std::vector<VertexSet>{VertexSet::of({1, 2, 3})});

  SimplicialComplex tri = independence_complex(fixtures::single_edge(3));
  REQUIRE(link(tri, 0).facets ==
          std::vector<VertexSet>{VertexSet::of({1}), VertexSet::of({2})});
}

TEST_CASE("deleting everything leaves the empty-face complex") {
  SimplicialComplex c = SimplicialComplex::empty_face_complex(2);
  REQUIRE(deletion(c, 0) == SimplicialComplex::empty_face_complex(2));
  REQUIRE(link(c, 0).is_void());
}

TEST_CASE("induced subcomplexes restrict faces") {
  SimplicialComplex tri = independence_complex(fixtures::single_edge(3));
  SimplicialComplex sub = induced_subcomplex(tri, VertexSet::of({0, 1}));
  REQUIRE(sub.facets == std::vector<VertexSet>{VertexSet::of({0, 1})});

  SimplicialComplex k3 = independence_complex(fixtures::triangle());
  SimplicialComplex pts = induced_subcomplex(k3, VertexSet::of({0, 2}));
  REQUIRE(pts.facets == std::vector<VertexSet>{VertexSet::of({0}), VertexSet::of({2})});

  REQUIRE(induced_subcomplex(k3, k3.support()) == k3);
  REQUIRE(induced_subcomplex(k3, VertexSet{}) ==
          SimplicialComplex{3, {VertexSet{}}, false});
}

TEST_CASE("face queries") {
  SimplicialComplex c = independence_complex(fixtures::star());
  REQUIRE(is_face(c, VertexSet::of({1, 2})));
  REQUIRE_FALSE(is_face(c, VertexSet::of({0, 1})));
  REQUIRE(is_face(c, VertexSet{}));
  REQUIRE_FALSE(is_face(SimplicialComplex::void_complex(2), VertexSet{}));
}

TEST_CASE("deletion and link mirror vertex deletion and contraction") {
  EnumerationOptions opts;
  enumerate_labeled_antichains(5, 6, opts, [&](const SimpleHypergraph& h) {
    SimplicialComplex c = independence_complex(h);
    for (int x = 0; x < h.n; ++x) {
      DeletionResult del = delete_vertex(h, x);
      SimplicialComplex expected_del = deletion(c, x);
      std::vector<VertexSet> mapped;
      for (VertexSet f : independence_complex(del.hypergraph).facets)
        mapped.push_back(del.relabeling.backward(f));
      canonical_sort_edges(mapped);
      REQUIRE(mapped == expected_del.facets);

      ContractionResult ctr = contract_vertex(h, x);
      SimplicialComplex expected_lk = link(c, x);
      std::vector<VertexSet> mapped_lk;
      for (VertexSet f : independence_complex(ctr.hypergraph).facets)
        mapped_lk.push_back(ctr.relabeling.backward(f));
      canonical_sort_edges(mapped_lk);
      if (expected_lk.is_void()) {
        // {x} is a non-face exactly when H has the singleton edge {x}.
        REQUIRE(std::find(h.edges.begin(), h.edges.end(), VertexSet::single(x)) !=
                h.edges.end());
      } else {
        REQUIRE(mapped_lk == expected_lk.facets);
      }
    }
  });
}

TEST_CASE("faces are exactly the edge-free subsets") {
  EnumerationOptions opts;
  enumerate_labeled_antichains(4, 6, opts, [&](const SimpleHypergraph& h) {
    SimplicialComplex c = independence_complex(h);
    const std::uint64_t limit = std::uint64_t{1} << h.n;
    for (std::uint64_t s = 0; s < limit; ++s) {
      VertexSet f{s};
      REQUIRE(is_face(c, f) == !oracles::contains_some_edge(h, f));
    }
  });
}

TEST_CASE("isolated vertices make the complex a cone over them") {
  SimpleHypergraph h = build_simple(5, std::vector<std::vector<int>>{{0, 1}, {1, 2}});
  SimplicialComplex c = independence_complex(h);
  for (VertexSet f : c.facets) {
    REQUIRE(f.contains(3));
    REQUIRE(f.contains(4));
  }
}
