#include <map>

#include "critgraph/basisenum.hpp"
#include "critgraph/graph.hpp"
#include "critgraph/polytopes.hpp"
#include "critgraph/stability.hpp"
#include "critgraph/transforms.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace critgraph;

TEST_CASE("structure generator matches the counting formula") {
  // connected graphs up to isomorphism: 1, 1, 2, 6, 21, 112, 853
  std::vector<long long> expected = oracle::connected_graph_counts(7);
  std::vector<WeightedGraph> all = connected_structures(7, 6);
  std::map<int, long long> by_n;
  for (const auto& g : all) {
    ++by_n[g.n()];
    CHECK(connected(g));
    CHECK(g.unit_weights());
  }
  for (int n = 1; n <= 7; ++n) CHECK(by_n[n] == expected[n]);
}

TEST_CASE("structure generator respects the degree bound") {
  std::vector<WeightedGraph> cubic = connected_structures(6, 3);
  for (const auto& g : cubic) CHECK(g.max_degree() <= 3);
  // connected graphs with max degree <= 2 are paths and cycles:
  // one path per order, one cycle per order >= 3
  std::vector<WeightedGraph> thin = connected_structures(8, 2);
  std::map<int, int> by_n;
  for (const auto& g : thin) {
    ++by_n[g.n()];
    CHECK(g.max_degree() <= 2);
  }
  CHECK(by_n[1] == 1);
  CHECK(by_n[2] == 1);
  for (int n = 3; n <= 8; ++n) CHECK(by_n[n] == 2);
}

TEST_CASE("structures arrive without isomorphic duplicates") {
  std::vector<WeightedGraph> all = connected_structures(6, 5);
  std::vector<std::string> certs;
  for (const auto& g : all) certs.push_back(canonical_form(g).certificate);
  std::sort(certs.begin(), certs.end());
  CHECK(std::adjacent_find(certs.begin(), certs.end()) == certs.end());
}

TEST_CASE("defect-one basis holds exactly the triangle") {
  for (BasisTarget target : {BasisTarget::cfg, BasisTarget::fdg}) {
    SearchSpace space;
    space.target = target;
    space.defect = 1;
    space.max_vertices = 8;
    BasisCatalog cat = enumerate_basis(space);
    REQUIRE(cat.members.size() == 1);
    CHECK(cat.members[0].graph.n() == 3);
    CHECK(cat.members[0].graph.m() == 3);
    CHECK(cat.members[0].graph.unit_weights());
    CHECK(cat.structures_examined > 0);
    CHECK(catalog_contains(cat, oracle::unit(3, oracle::complete_edges(3))));
    CHECK_FALSE(catalog_contains(cat, oracle::unit(5, oracle::cycle_edges(5))));
  }
}

TEST_CASE("membership is up to isomorphism") {
  SearchSpace space;
  space.defect = 1;
  space.max_vertices = 6;
  BasisCatalog cat = enumerate_basis(space);
  // a relabeled triangle with scrambled ids
  WeightedGraph odd = WeightedGraph::build({"x", "q", "m"}, {1, 1, 1},
                                           {{0, 1}, {0, 2}, {1, 2}});
  CHECK(catalog_contains(cat, odd));
}

TEST_CASE("reduction lands in the catalog") {
  SearchSpace space;
  space.target = BasisTarget::cfg;
  space.defect = 1;
  space.max_vertices = 6;
  BasisCatalog cat = enumerate_basis(space);

  ReductionCheck c5 = verify_basis_property(cat, oracle::unit(5, oracle::cycle_edges(5)));
  CHECK(c5.contained);
  CHECK(c5.reduced.n() == 3);
  ReductionCheck c9 = verify_basis_property(cat, oracle::unit(9, oracle::cycle_edges(9)));
  CHECK(c9.contained);

  SearchSpace fspace;
  fspace.target = BasisTarget::fdg;
  fspace.defect = 1;
  fspace.max_vertices = 6;
  BasisCatalog fcat = enumerate_basis(fspace);
  ReductionCheck c7 = verify_basis_property(fcat, oracle::unit(7, oracle::cycle_edges(7)));
  CHECK(c7.contained);
  CHECK(c7.reduced.n() == 3);
}

TEST_CASE("subdividing a member leaves the catalog but reduces back into it") {
  SearchSpace space;
  space.target = BasisTarget::cfg;
  space.defect = 1;
  space.max_vertices = 8;
  BasisCatalog cat = enumerate_basis(space);
  WeightedGraph k3 = oracle::unit(3, oracle::complete_edges(3));
  WeightedGraph grown = unit_odd_subdivision(k3, {{{0, 1}, 3}});
  CHECK_FALSE(catalog_contains(cat, grown));
  ReductionCheck back = verify_basis_property(cat, grown);
  CHECK(back.contained);
}
