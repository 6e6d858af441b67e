#include <random>
#include <set>

#include "critgraph/graph.hpp"
#include "critgraph/stability.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace critgraph;

namespace {

std::vector<uint64_t> brute_max_sets(const WeightedGraph& g) {
  const int best = oracle::brute_alpha(g);
  std::vector<uint64_t> sets;
  for (uint64_t mask = 0; mask < (uint64_t(1) << g.n()); ++mask)
    if (g.is_stable(mask) && g.set_weight(mask) == best) sets.push_back(mask);
  return sets;
}

WeightedGraph random_graph(std::mt19937_64& rng, int n, int max_weight) {
  std::vector<int> w(n);
  for (auto& x : w) x = 1 + (int)(rng() % max_weight);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng() % 2) edges.emplace_back(i, j);
  return oracle::build(n, w, edges);
}

}  // namespace

TEST_CASE("alpha on named graphs") {
  WeightedGraph k3 = oracle::unit(3, oracle::complete_edges(3));
  StabilityReport r = alpha_report(k3);
  CHECK(r.alpha == 1);
  CHECK(r.defect == 1);
  CHECK(r.max_stable_sets.size() == 3);

  WeightedGraph c5 = oracle::unit(5, oracle::cycle_edges(5));
  r = alpha_report(c5);
  CHECK(r.alpha == 2);
  CHECK(r.defect == 1);
  CHECK(r.max_stable_sets.size() == 5);

  WeightedGraph k4 = oracle::unit(4, oracle::complete_edges(4));
  r = alpha_report(k4);
  CHECK(r.alpha == 1);
  CHECK(r.defect == 2);
  CHECK(r.max_stable_sets.size() == 4);
}

TEST_CASE("alpha agrees with the exhaustive scan") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 120; ++trial) {
    WeightedGraph g = random_graph(rng, 2 + (int)(rng() % 6), 4);
    CHECK(alpha_value(g) == oracle::brute_alpha(g));
  }
}

TEST_CASE("report lists exactly the maximum stable sets in mask order") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 60; ++trial) {
    WeightedGraph g = random_graph(rng, 2 + (int)(rng() % 5), 3);
    StabilityReport r = alpha_report(g);
    std::vector<uint64_t> got;
    for (const auto& s : r.max_stable_sets) {
      got.push_back(s.mask);
      CHECK(s.weight == r.alpha);
      CHECK(s.induced_edges == 0);
    }
    CHECK(got == brute_max_sets(g));
  }
}

TEST_CASE("forced alpha") {
  WeightedGraph c5 = oracle::unit(5, oracle::cycle_edges(5));
  CHECK(alpha_value_forced(c5, 0, 0) == 2);
  CHECK(alpha_value_forced(c5, 0b00001, 0) == 2);
  CHECK(alpha_value_forced(c5, 0, 0b00101) == 2);    // exclude 0 and 2, {1,3} remains
  CHECK(alpha_value_forced(c5, 0, 0b00111) == 1);    // only the edge 3-4 left
  CHECK(alpha_value_forced(c5, 0b00010, 0b01000) == 2);
  CHECK_THROWS_AS(alpha_value_forced(c5, 0b00011, 0), PreconditionError);
}

TEST_CASE("edge strength on named graphs") {
  StrengthMap s = strength(oracle::unit(3, oracle::complete_edges(3)));
  CHECK(s.min_strength == 1);
  CHECK(s.max_strength == 1);

  s = strength(oracle::unit(5, oracle::cycle_edges(5)));
  for (int x : s.by_edge) CHECK(x == 1);

  // path 0-1-2-3: removing the middle edge gains nothing
  WeightedGraph p4 = oracle::unit(4, oracle::path_edges(4));
  s = strength(p4);
  CHECK(s.by_edge == std::vector<int>{1, 0, 1});
  CHECK(s.min_strength == 0);
}

TEST_CASE("strength agrees with the exhaustive scan and respects endpoint weights") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    WeightedGraph g = random_graph(rng, 2 + (int)(rng() % 5), 4);
    if (g.m() == 0) continue;
    StrengthMap s = strength(g);
    CHECK(s.by_edge == oracle::brute_strengths(g));
    for (size_t i = 0; i < g.edges().size(); ++i) {
      auto [u, v] = g.edges()[i];
      CHECK(s.by_edge[i] <= std::min(g.weight(u), g.weight(v)));
      CHECK(s.by_edge[i] >= 0);
    }
  }
}

TEST_CASE("strength is job-count independent") {
  WeightedGraph c7 = oracle::unit(7, oracle::cycle_edges(7));
  CHECK(strength(c7, {}, 1).by_edge == strength(c7, {}, 4).by_edge);
}

TEST_CASE("alpha-criticality") {
  CHECK(is_alpha_critical(oracle::unit(7, oracle::cycle_edges(7)), true));
  CHECK(is_alpha_critical(oracle::unit(4, oracle::complete_edges(4)), true));
  CHECK_FALSE(is_alpha_critical(oracle::unit(4, oracle::path_edges(4)), false));
  CHECK_FALSE(is_alpha_critical(oracle::unit(4, oracle::cycle_edges(4)), true));
  // connectivity requirement only bites when requested
  WeightedGraph two_k3 = oracle::unit(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  CHECK(is_alpha_critical(two_k3, false));
  CHECK_FALSE(is_alpha_critical(two_k3, true));
  CHECK_THROWS_AS(is_alpha_critical(oracle::build(3, {2, 1, 1}, oracle::complete_edges(3)), false),
                  PreconditionError);
}

TEST_CASE("weighted criticality") {
  CHECK(is_critical_weighted(oracle::unit(5, oracle::cycle_edges(5))));
  CHECK(is_critical_weighted(oracle::build(3, {2, 2, 2}, oracle::complete_edges(3))));
  // the edge between the two unit vertices has strength 0
  CHECK_FALSE(is_critical_weighted(oracle::build(3, {2, 1, 1}, oracle::complete_edges(3))));
  CHECK_FALSE(is_critical_weighted(oracle::unit(4, oracle::cycle_edges(4))));
}

TEST_CASE("vertex splitting") {
  WeightedGraph k5 = oracle::unit(5, oracle::complete_edges(5));
  // neighbors of 0 are {1,2,3,4}; put {1,2} on one side
  WeightedGraph split = split_vertex(k5, 0, 0b00110, 0b11000);
  CHECK(split.n() == 7);
  CHECK(split.m() == k5.m() - 4 + 2 + 2 + 2);
  CHECK(alpha_value(split) == alpha_value(k5) + 1);
  CHECK(split.total_weight() - 2 * alpha_value(split) ==
        k5.total_weight() - 2 * alpha_value(k5));
  CHECK(is_alpha_critical(split, true));

  // degree 3 is too small to split
  WeightedGraph k4 = oracle::unit(4, oracle::complete_edges(4));
  CHECK_THROWS_AS(split_vertex(k4, 0, 0b0110, 0b1000), PreconditionError);
  // sides must partition the neighborhood
  CHECK_THROWS_AS(split_vertex(k5, 0, 0b00110, 0b01000), PreconditionError);
  CHECK_THROWS_AS(split_vertex(k5, 0, 0b00010, 0b11100), PreconditionError);
}

TEST_CASE("lexicographically minimal maximum stable set") {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 60; ++trial) {
    WeightedGraph g = random_graph(rng, 2 + (int)(rng() % 5), 3);
    CHECK(lex_min_max_stable(g) == brute_max_sets(g).front());
  }
}

TEST_CASE("random maximum stable sets are valid and cover") {
  WeightedGraph c5 = oracle::unit(5, oracle::cycle_edges(5));
  std::mt19937_64 rng(25);
  std::set<uint64_t> seen;
  for (int trial = 0; trial < 200; ++trial) {
    uint64_t mask = random_max_stable(c5, rng);
    CHECK(c5.is_stable(mask));
    CHECK(c5.set_weight(mask) == 2);
    seen.insert(mask);
  }
  CHECK(seen.size() == 5);  // all five maximum stable sets of C5 appear
}
