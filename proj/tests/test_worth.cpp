#include <random>
#include <set>

#include "critgraph/graph.hpp"
#include "critgraph/stability.hpp"
#include "critgraph/worth.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace critgraph;

namespace {

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

TEST_CASE("worth of explicit sets") {
  WeightedGraph k3 = oracle::unit(3, oracle::complete_edges(3));
  CHECK(worth_of(k3, 0) == 0);
  CHECK(worth_of(k3, 0b001) == 1);
  CHECK(worth_of(k3, 0b011) == 1);  // two vertices, one edge
  CHECK(worth_of(k3, 0b111) == 0);  // three vertices, three edges
}

TEST_CASE("beta on named graphs") {
  WeightedGraph k3 = oracle::unit(3, oracle::complete_edges(3));
  WorthReport r = beta_report(k3);
  CHECK(r.beta == 1);
  CHECK(r.subdefect == 1);
  // singletons and pairs all have worth 1
  CHECK(r.max_worth_sets.size() == 6);

  WeightedGraph k4 = oracle::unit(4, oracle::complete_edges(4));
  r = beta_report(k4);
  CHECK(r.beta == 1);
  CHECK(r.subdefect == 2);

  CHECK(subdefect(oracle::unit(5, oracle::cycle_edges(5))) == 1);
}

TEST_CASE("beta agrees with the exhaustive scan") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 120; ++trial) {
    WeightedGraph g = random_graph(rng, 1 + (int)(rng() % 6), 4);
    CHECK(beta_value(g) == oracle::brute_beta(g));
  }
}

TEST_CASE("report lists exactly the maximum worth sets in mask order") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 60; ++trial) {
    WeightedGraph g = random_graph(rng, 1 + (int)(rng() % 5), 3);
    WorthReport r = beta_report(g);
    std::vector<uint64_t> expected;
    for (uint64_t mask = 0; mask < (uint64_t(1) << g.n()); ++mask)
      if (worth_of(g, mask) == r.beta) expected.push_back(mask);
    std::vector<uint64_t> got;
    for (const auto& s : r.max_worth_sets) {
      got.push_back(s.mask);
      CHECK(s.weight - s.induced_edges == r.beta);
    }
    CHECK(got == expected);
  }
}

TEST_CASE("beta relations to alpha") {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 80; ++trial) {
    WeightedGraph g = random_graph(rng, 1 + (int)(rng() % 5), 3);
    const int a = alpha_value(g), b = beta_value(g);
    CHECK(b >= a);  // stable sets are candidates
    CHECK(g.total_weight() - 2 * b <= g.total_weight() - 2 * a);
    // an edge removal changes beta by at most one
    if (g.m() > 0) {
      auto [eu, ev] = g.edges()[0];
      const int b2 = beta_value(g.without_edge(eu, ev));
      CHECK(b2 >= b);
      CHECK(b2 <= b + 1);
    }
  }
}

TEST_CASE("beta equals alpha when every edge has a weight-one endpoint") {
  std::mt19937_64 rng(34);
  int covered = 0;
  for (int trial = 0; trial < 120; ++trial) {
    WeightedGraph g = random_graph(rng, 1 + (int)(rng() % 5), 2);
    bool ok = true;
    for (auto [u, v] : g.edges())
      if (g.weight(u) > 1 && g.weight(v) > 1) ok = false;
    if (!ok) continue;
    ++covered;
    CHECK(beta_value(g) == alpha_value(g));
  }
  CHECK(covered > 20);
}

TEST_CASE("forced beta") {
  WeightedGraph k3 = oracle::unit(3, oracle::complete_edges(3));
  CHECK(beta_value_forced(k3, 0, 0) == 1);
  CHECK(beta_value_forced(k3, 0b011, 0) == 1);
  CHECK(beta_value_forced(k3, 0b111, 0) == 0);
  CHECK(beta_value_forced(k3, 0, 0b111) == 0);
  std::mt19937_64 rng(35);
  for (int trial = 0; trial < 40; ++trial) {
    WeightedGraph g = random_graph(rng, 1 + (int)(rng() % 5), 3);
    const uint64_t all = (uint64_t(1) << g.n()) - 1;
    const uint64_t in = rng() & all;
    const uint64_t out = rng() & all & ~in;
    int best = -1000000;
    for (uint64_t mask = 0; mask < (uint64_t(1) << g.n()); ++mask) {
      if ((mask & in) != in || (mask & out) != 0) continue;
      best = std::max(best, worth_of(g, mask));
    }
    CHECK(beta_value_forced(g, in, out) == best);
  }
}

TEST_CASE("sequence bound on the triangle") {
  // T_1 = {1,2}, T_2 = {3}, T_3 = {1}, T_4 = {2,3}
  WeightedGraph k3 = oracle::unit(3, oracle::complete_edges(3));
  WorthSequenceBound b = sequence_bound(k3, {0b011, 0b100, 0b001, 0b110});
  CHECK(b.defect == 1);
  CHECK(b.bound == 1);
  REQUIRE(b.x_sets.size() == 2);
  CHECK(b.x_sets[0].mask == 0b001);  // X_3 = {1}
  CHECK(b.x_sets[0].induced_edges == 0);
  CHECK(b.x_sets[1].mask == 0b110);  // X_4 = {2,3}
  CHECK(b.x_sets[1].induced_edges == 1);
}

TEST_CASE("sequence bound validation") {
  WeightedGraph k3 = oracle::unit(3, oracle::complete_edges(3));
  // not a maximum worth set
  CHECK_THROWS_AS(sequence_bound(k3, {0b111, 0b001, 0b010}), PreconditionError);
  // vertex 3 never appears
  CHECK_THROWS_AS(sequence_bound(k3, {0b001, 0b010, 0b011}), PreconditionError);
  // vertex 1 appears in every set
  CHECK_THROWS_AS(sequence_bound(k3, {0b001, 0b011, 0b101}), PreconditionError);
  // weighted graphs are out of scope
  WeightedGraph w = oracle::build(3, {2, 1, 1}, oracle::complete_edges(3));
  CHECK_THROWS_AS(sequence_bound(w, {0b001, 0b110}), PreconditionError);
  // non-critical graphs are out of scope
  WeightedGraph c4 = oracle::unit(4, oracle::cycle_edges(4));
  CHECK_THROWS_AS(sequence_bound(c4, {0b0101, 0b1010}), PreconditionError);
}

TEST_CASE("sequence of stable sets never exceeds zero inside-edge total") {
  // when every T_i is stable, sum ||T_i|| = 0, so the bound is at most 0
  WeightedGraph c5 = oracle::unit(5, oracle::cycle_edges(5));
  WorthSequenceBound b = sequence_bound(c5, {0b00101, 0b01010, 0b10010, 0b01001});
  CHECK(b.bound <= 0);
  CHECK(b.defect == 1);
}

TEST_CASE("sequence bound from edge deletion sets on the complete graph") {
  // K4: T_e = both ends of e is a maximum worth set with one inside edge
  WeightedGraph k4 = oracle::unit(4, oracle::complete_edges(4));
  std::vector<uint64_t> sets;
  for (auto [u, v] : k4.edges()) sets.push_back((uint64_t(1) << u) | (uint64_t(1) << v));
  WorthSequenceBound b = sequence_bound(k4, sets);
  CHECK(b.defect == 2);
  CHECK(b.bound <= 2);
}

TEST_CASE("random maximum worth sets are valid and cover") {
  // random-order forcing lands on inclusion-maximal optima: on the unit
  // triangle these are the three edges, never the singletons
  WeightedGraph k3 = oracle::unit(3, oracle::complete_edges(3));
  std::mt19937_64 rng(36);
  std::set<uint64_t> seen;
  for (int trial = 0; trial < 300; ++trial) {
    uint64_t mask = random_max_worth_set(k3, rng);
    CHECK(worth_of(k3, mask) == 1);
    seen.insert(mask);
  }
  CHECK(seen == std::set<uint64_t>{0b011, 0b101, 0b110});
}
