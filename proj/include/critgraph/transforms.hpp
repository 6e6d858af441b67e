#pragma once

#include <map>
#include <utility>
#include <vector>

#include "critgraph/graph.hpp"

namespace critgraph {

// Replace each listed edge vw by a path v - x - y - w where the two new
// vertices carry weight s(vw), the strength of the replaced edge.
// Fresh ids are "<v>-<w>#1" and "<v>-<w>#2".
WeightedGraph elementary_odd_subdivision(const WeightedGraph& g,
                                         const std::vector<std::pair<int, int>>& edge_list,
                                         const Caps& caps = {});

// Replace each listed edge by a path of odd length >= 3 whose interior
// vertices all have weight 1.
WeightedGraph unit_odd_subdivision(const WeightedGraph& g,
                                   const std::map<std::pair<int, int>, int>& lengths);

// Inverse of a unit length-3 subdivision: remove adjacent degree-2
// weight-1 vertices u, v and join their outer neighbors u', v'.
// Requires u' != v' and u'v' not an edge (the induced path u'uvv').
WeightedGraph shrink_once(const WeightedGraph& g, int u, int v);

// Inverse of an elementary subdivision: remove adjacent degree-2
// vertices x, y with a(x) = a(y) = s(xy) and join their outer
// neighbors. Same induced-path requirement as shrink_once.
WeightedGraph elementary_shrink_once(const WeightedGraph& g, int x, int y,
                                     const Caps& caps = {});

// True when some remote edge admits the induced path that shrink_once
// needs. The basis families are exactly the graphs where none does.
bool has_shrinkable_remote_edge(const WeightedGraph& g);

// Unit length-3 subdivision of every edge. Applied to a graph whose
// graphical inequality is a facet, the output is a 1-critical facet
// graph of the stable set polytope with defect equal to the input's
// subdefect; both are verified before returning.
WeightedGraph to_one_cfg(const WeightedGraph& g, const Caps& caps = {});

// Repeatedly shrink the smallest shrinkable remote edge of a facet
// defining graph. Ends in the basis family (no shrinkable remote edge
// left); subdefect is re-verified after every step.
WeightedGraph shrink_to_basis(const WeightedGraph& g, const Caps& caps = {});

// The critical-graph analogue: repeatedly undo elementary odd
// subdivisions until none applies. Criticality, facet status and
// defect are re-verified after every step.
WeightedGraph cfg_reduce(const WeightedGraph& g, const Caps& caps = {});

}  // namespace critgraph
