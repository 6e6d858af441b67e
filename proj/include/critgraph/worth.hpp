#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "critgraph/graph.hpp"

namespace critgraph {

// worth(S) = a(S) - (number of edges inside S)
int worth_of(const WeightedGraph& g, uint64_t mask);

struct WorthReport {
  int beta = 0;
  int subdefect = 0;  // a(V) - 2 beta
  std::vector<VertexSet> max_worth_sets;  // complete, increasing mask order
};

// Maximum worth over all vertex subsets, exact branch and bound.
int beta_value(const WeightedGraph& g, const Caps& caps = {});

WorthReport beta_report(const WeightedGraph& g, const Caps& caps = {});

int subdefect(const WeightedGraph& g, const Caps& caps = {});

struct WorthSequenceBound {
  std::vector<VertexSet> sequence;
  std::vector<VertexSet> x_sets;  // X_j for j = 3..k, in order
  int bound = 0;                  // sum ||T_i|| - sum ||X_j||
  int defect = 0;
};

// Lower-bound certificate for the defect of a unit-weight critical
// graph: given maximum worth sets T_1..T_k where every vertex lies in
// some T_i and outside some T_j, with
//   X_j = ((T_1 u ... u T_{j-1}) n T_j) u ((T_1 n ... n T_{j-1}) \ T_j),
// the value sum ||T_i|| - sum_{j>=3} ||X_j|| never exceeds the defect.
// Throws InconsistencyError if the computed bound does exceed it.
WorthSequenceBound sequence_bound(const WeightedGraph& g, const std::vector<uint64_t>& sets,
                                  const Caps& caps = {});

// Some maximum worth set reached by random-order forcing.
uint64_t random_max_worth_set(const WeightedGraph& g, std::mt19937_64& rng,
                              const Caps& caps = {});

// Constrained variant used by the samplers: maximum worth over sets
// containing forced_in and avoiding forced_out.
int beta_value_forced(const WeightedGraph& g, uint64_t forced_in, uint64_t forced_out,
                      const Caps& caps = {});

}  // namespace critgraph
