#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "critgraph/graph.hpp"

namespace critgraph {

struct StabilityReport {
  int alpha = 0;
  int defect = 0;  // a(V) - 2 alpha
  std::vector<VertexSet> max_stable_sets;  // complete, increasing mask order
};

// Maximum weight of a stable set, exact branch and bound (branch on a
// max-degree candidate, bound by residual weight).
int alpha_value(const WeightedGraph& g, const Caps& caps = {});

// Alpha plus the complete list of maximum stable sets.
StabilityReport alpha_report(const WeightedGraph& g, const Caps& caps = {});

// Maximum over stable sets containing all of forced_in and avoiding
// forced_out. Throws PreconditionError when forced_in is not stable.
int alpha_value_forced(const WeightedGraph& g, uint64_t forced_in, uint64_t forced_out,
                       const Caps& caps = {});

struct StrengthMap {
  std::vector<int> by_edge;  // parallel to g.edges()
  int min_strength = 0;
  int max_strength = 0;
};

// s(e) = alpha(G - e) - alpha(G) for every edge.
StrengthMap strength(const WeightedGraph& g, const Caps& caps = {}, int jobs = 1);

// alpha(G - e) > alpha(G) for every edge; unit weights required.
bool is_alpha_critical(const WeightedGraph& g, bool require_connected, const Caps& caps = {});

// The weighted analogue: every edge has positive strength.
bool is_critical_weighted(const WeightedGraph& g, const Caps& caps = {});

// Replace v (all weights 1, deg >= 4) by v1 adjacent to n1, v2
// adjacent to n2, and v' adjacent to v1 and v2, where n1, n2 partition
// N(v) with both sides of size >= 2.
WeightedGraph split_vertex(const WeightedGraph& g, int v, uint64_t n1, uint64_t n2);

// Smallest maximum stable set in mask order, found by per-vertex
// forcing rather than full enumeration.
uint64_t lex_min_max_stable(const WeightedGraph& g, const Caps& caps = {});

// Some maximum stable set reached by forcing vertices in random order;
// every maximum stable set has positive probability.
uint64_t random_max_stable(const WeightedGraph& g, std::mt19937_64& rng, const Caps& caps = {});

}  // namespace critgraph
