#pragma once

#include <string>
#include <vector>

#include "critgraph/graph.hpp"

namespace critgraph {

enum class BasisTarget { cfg, fdg };

struct SearchSpace {
  BasisTarget target = BasisTarget::cfg;
  int defect = 1;        // defect (cfg) or subdefect (fdg) of the members
  int max_vertices = 8;  // enumeration cap, completeness holds below it
};

struct BasisMember {
  WeightedGraph graph;  // canonical form
  std::string certificate;
  bool oracle_confirmed = true;  // false when only the certificate route fit the caps
};

struct BasisCatalog {
  SearchSpace space;
  std::vector<BasisMember> members;  // sorted by (n, m, certificate)
  long long structures_examined = 0;
  long long weightings_examined = 0;
};

// All connected graphs up to isomorphism with 1..max_vertices vertices
// and maximum degree <= max_degree, as unit-weight graphs. Orderly
// level extension: every connected graph arises by adding a vertex
// whose removal leaves the rest connected.
std::vector<WeightedGraph> connected_structures(int max_vertices, int max_degree,
                                                const Caps& caps = {});

// The graphs of the requested defect that no shrink step can reduce:
// connected, no remote edge admits the induced path a shrink needs,
// and the target predicate holds (1-critical facet-graph of the stable
// set polytope at the given defect, or facet-defining graphical
// inequality at the given subdefect). Search space is cut by the
// member degree and weight bounds, which are re-asserted per member.
BasisCatalog enumerate_basis(const SearchSpace& space, const Caps& caps = {});

bool catalog_contains(const BasisCatalog& catalog, const WeightedGraph& g);

struct ReductionCheck {
  bool contained = false;
  WeightedGraph reduced;
  std::string certificate;
};

// Reduce g with the matching shrink loop and test membership of the
// result. The reduction re-verifies its invariants at every step.
ReductionCheck verify_basis_property(const BasisCatalog& catalog, const WeightedGraph& g,
                                     const Caps& caps = {});

}  // namespace critgraph
