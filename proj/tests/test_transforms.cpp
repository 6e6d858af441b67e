#include <map>

#include "critgraph/graph.hpp"
#include "critgraph/polytopes.hpp"
#include "critgraph/stability.hpp"
#include "critgraph/transforms.hpp"
#include "critgraph/worth.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace critgraph;

TEST_CASE("unit subdivision of one edge turns a triangle into a five-cycle") {
  WeightedGraph k3 = oracle::unit(3, oracle::complete_edges(3));
  WeightedGraph out = unit_odd_subdivision(k3, {{{0, 1}, 3}});
  CHECK(out.n() == 5);
  CHECK(out.m() == 5);
  CHECK(out.unit_weights());
  CHECK(canonical_form(out).certificate ==
        canonical_form(oracle::unit(5, oracle::cycle_edges(5))).certificate);
  // fresh interior ids mention both endpoints
  CHECK(out.id(3) == "1-2#1");
  CHECK(out.id(4) == "1-2#2");
}

TEST_CASE("longer paths and several edges at once") {
  WeightedGraph k3 = oracle::unit(3, oracle::complete_edges(3));
  WeightedGraph c7 = unit_odd_subdivision(k3, {{{0, 1}, 5}});
  CHECK(canonical_form(c7).certificate ==
        canonical_form(oracle::unit(7, oracle::cycle_edges(7))).certificate);

  std::map<std::pair<int, int>, int> all;
  for (auto e : k3.edges()) all[e] = 3;
  WeightedGraph c9 = unit_odd_subdivision(k3, all);
  CHECK(canonical_form(c9).certificate ==
        canonical_form(oracle::unit(9, oracle::cycle_edges(9))).certificate);

  CHECK_THROWS_AS(unit_odd_subdivision(k3, {{{0, 1}, 2}}), PreconditionError);
  CHECK_THROWS_AS(unit_odd_subdivision(k3, {{{0, 1}, 1}}), PreconditionError);
  CHECK_THROWS_AS(unit_odd_subdivision(k3, {{{0, 2}, 3}, {{2, 0}, 3}}), PreconditionError);
}

TEST_CASE("elementary subdivision carries the edge strength onto the new vertices") {
  // all-two triangle edges have strength 2, so the interior pair gets weight 2
  WeightedGraph k3w = oracle::build(3, {2, 2, 2}, oracle::complete_edges(3));
  WeightedGraph out = elementary_odd_subdivision(k3w, {{0, 1}});
  CHECK(out.n() == 5);
  CHECK(out.weight(3) == 2);
  CHECK(out.weight(4) == 2);
  CHECK(is_cfg(out));
  const int defect_before = k3w.total_weight() - 2 * alpha_value(k3w);
  CHECK(out.total_weight() - 2 * alpha_value(out) == defect_before);
  StrengthMap s = strength(out);
  CHECK(s.min_strength == 2);
  CHECK(s.max_strength == 2);

  // on a 1-critical graph the elementary and unit forms coincide
  WeightedGraph k3 = oracle::unit(3, oracle::complete_edges(3));
  WeightedGraph a = elementary_odd_subdivision(k3, {{0, 1}});
  CHECK(a.unit_weights());
  CHECK(canonical_form(a).certificate ==
        canonical_form(unit_odd_subdivision(k3, {{{0, 1}, 3}})).certificate);
}

TEST_CASE("shrinking undoes subdivision") {
  WeightedGraph c5 = oracle::unit(5, oracle::cycle_edges(5));
  // vertices 3, 4 are adjacent and both degree 2 on the cycle
  WeightedGraph back = shrink_once(c5, 3, 4);
  CHECK(canonical_form(back).certificate ==
        canonical_form(oracle::unit(3, oracle::complete_edges(3))).certificate);

  WeightedGraph k3 = oracle::unit(3, oracle::complete_edges(3));
  WeightedGraph there = unit_odd_subdivision(k3, {{{0, 1}, 3}});
  WeightedGraph again = shrink_once(there, 3, 4);
  CHECK(canonical_form(again).certificate == canonical_form(k3).certificate);
}

TEST_CASE("shrink preconditions") {
  WeightedGraph k3 = oracle::unit(3, oracle::complete_edges(3));
  // outer neighbors coincide
  CHECK_THROWS_AS(shrink_once(k3, 0, 1), PreconditionError);
  WeightedGraph c4 = oracle::unit(4, oracle::cycle_edges(4));
  // outer neighbors are already adjacent
  CHECK_THROWS_AS(shrink_once(c4, 1, 2), PreconditionError);
  // not an edge
  WeightedGraph c5 = oracle::unit(5, oracle::cycle_edges(5));
  CHECK_THROWS_AS(shrink_once(c5, 0, 2), PreconditionError);
  // wrong weights
  WeightedGraph w5 = oracle::build(5, {1, 1, 1, 2, 2}, oracle::cycle_edges(5));
  CHECK_THROWS_AS(shrink_once(w5, 3, 4), PreconditionError);
  // elementary variant accepts matching weights when they equal the strength
  WeightedGraph back = elementary_shrink_once(w5, 3, 4);
  CHECK(back.n() == 3);
}

TEST_CASE("shrinkable remote edge detection") {
  CHECK(has_shrinkable_remote_edge(oracle::unit(5, oracle::cycle_edges(5))));
  CHECK_FALSE(has_shrinkable_remote_edge(oracle::unit(3, oracle::complete_edges(3))));
  CHECK_FALSE(has_shrinkable_remote_edge(oracle::unit(4, oracle::complete_edges(4))));
  // C4: every remote edge has adjacent outer neighbors
  CHECK_FALSE(has_shrinkable_remote_edge(oracle::unit(4, oracle::cycle_edges(4))));
}

TEST_CASE("full subdivision produces a unit-weight one-critical facet graph") {
  WeightedGraph k3 = oracle::unit(3, oracle::complete_edges(3));
  WeightedGraph nine = to_one_cfg(k3);
  CHECK(canonical_form(nine).certificate ==
        canonical_form(oracle::unit(9, oracle::cycle_edges(9))).certificate);
  CHECK(is_one_cfg(nine));
  CHECK(nine.total_weight() - 2 * alpha_value(nine) == subdefect(k3));

  WeightedGraph k4 = oracle::unit(4, oracle::complete_edges(4));
  WeightedGraph big = to_one_cfg(k4);
  CHECK(big.n() == 4 + 2 * 6);
  CHECK(big.unit_weights());
  CHECK(is_one_cfg(big));
  CHECK(big.total_weight() - 2 * alpha_value(big) == 2);

  // inputs whose inequality is not a facet are rejected
  CHECK_THROWS_AS(to_one_cfg(oracle::unit(4, oracle::cycle_edges(4))), PreconditionError);
  WeightedGraph k3w = oracle::build(3, {2, 2, 2}, oracle::complete_edges(3));
  CHECK_FALSE(is_fdg(k3w).is_fdg);  // four tight sets cannot pin six unknowns
  CHECK_THROWS_AS(to_one_cfg(k3w), PreconditionError);
}

TEST_CASE("shrinking down to the basis family") {
  WeightedGraph c9 = oracle::unit(9, oracle::cycle_edges(9));
  WeightedGraph base = shrink_to_basis(c9);
  CHECK(canonical_form(base).certificate ==
        canonical_form(oracle::unit(3, oracle::complete_edges(3))).certificate);

  WeightedGraph k4 = oracle::unit(4, oracle::complete_edges(4));
  WeightedGraph same = shrink_to_basis(k4);
  CHECK(canonical_form(same).certificate == canonical_form(k4).certificate);
}

TEST_CASE("subdivide then shrink is the identity on the canonical form") {
  WeightedGraph c5 = oracle::unit(5, oracle::cycle_edges(5));
  WeightedGraph grown = unit_odd_subdivision(c5, {{{2, 3}, 3}});
  CHECK(canonical_form(shrink_to_basis(grown)).certificate ==
        canonical_form(shrink_to_basis(c5)).certificate);
}

TEST_CASE("critical reduction undoes elementary subdivisions") {
  WeightedGraph k4 = oracle::unit(4, oracle::complete_edges(4));
  WeightedGraph grown = elementary_odd_subdivision(k4, {{0, 1}, {2, 3}});
  CHECK(is_cfg(grown));
  WeightedGraph back = cfg_reduce(grown);
  CHECK(canonical_form(back).certificate == canonical_form(k4).certificate);
}

TEST_CASE("subdivision preserves facet and criticality status") {
  // one elementary subdivision per corpus-sized example
  std::vector<WeightedGraph> graphs = {
      oracle::unit(3, oracle::complete_edges(3)),
      oracle::unit(5, oracle::cycle_edges(5)),
      oracle::unit(4, oracle::complete_edges(4)),
  };
  for (const auto& g : graphs) {
    REQUIRE(is_cfg(g));
    const int lambda = subdefect(g);
    for (auto e : g.edges()) {
      WeightedGraph out = elementary_odd_subdivision(g, {e});
      CHECK(is_cfg(out));
      CHECK(subdefect(out) == lambda);
    }
  }
}
