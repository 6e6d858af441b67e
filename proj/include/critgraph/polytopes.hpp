#pragma once

#include <optional>
#include <string>
#include <vector>

#include "critgraph/graph.hpp"
#include "critgraph/linalg.hpp"
#include "critgraph/rational.hpp"

namespace critgraph {

enum class CertKind { stab, lop_system, lop_oracle };

// Outcome of a facet decision plus the data that proves it: the tight
// objects, the exact rank of their incidence system, and, for a
// non-facet system decision, a second solution of the tight equations.
struct FacetCertificate {
  CertKind kind = CertKind::stab;
  bool is_facet = false;
  int matrix_rank = 0;
  int required_rank = 0;
  long long tight_count = 0;
  std::vector<VertexSet> tight_sets;                 // stab / lop_system rows
  std::vector<std::vector<int>> basis_orders;        // lop_oracle rank witnesses
  std::optional<std::vector<Rat>> witness;           // non-facet witness
  // lop_oracle extras
  long long max_lhs = 0;
  long long rhs = 0;
  bool valid = true;  // max_lhs <= rhs
  bool tight = true;  // max_lhs == rhs
};

// Does sum a(v) x_v <= alpha define a facet of the stable set polytope?
// The inequality is valid by construction; facet iff the maximum
// stable set incidence vectors have linear rank |V|.
FacetCertificate is_facet_graph(const WeightedGraph& g, const Caps& caps = {});

bool is_cfg(const WeightedGraph& g, const Caps& caps = {});
bool is_k_critical_cfg(const WeightedGraph& g, int k, const Caps& caps = {});
bool is_one_cfg(const WeightedGraph& g, const Caps& caps = {});

enum class IneqMode { unit_coefficients, strength_coefficients };

// The inequality, over orders of V and a disjoint primed copy V':
//   sum_v a(v) x_{v v'} - sum_{vw in E} c(vw) (x_{v w'} + x_{w v'}) <= rhs
// with c = 1 and rhs = beta in unit mode, c = s(vw) and rhs left
// unresolved in strength mode. Node i is vertex i, node i+n its copy.
struct GraphicalInequality {
  IneqMode mode = IneqMode::unit_coefficients;
  int base_n = 0;
  std::vector<std::string> node_ids;               // size 2 * base_n
  std::vector<int> vertex_coeff;                   // size base_n
  std::vector<std::pair<int, int>> base_edges;     // u < v
  std::vector<int> edge_coeff;                     // parallel to base_edges
  std::optional<long long> rhs;

  int nodes() const { return 2 * base_n; }
  // pos[node] = position in the order, smaller = earlier.
  long long evaluate(const std::vector<int>& pos) const;
};

GraphicalInequality graphical_inequality(const WeightedGraph& g, IneqMode mode,
                                         const Caps& caps = {});

// Ground truth by full enumeration of all |N|! linear orders: exact
// maximum of the left side, validity and tightness against rhs, and
// the affine rank of the tight incidence vectors in the space with one
// coordinate per unordered node pair. Facet iff that rank reaches
// |N| (|N| - 1) / 2.
FacetCertificate lop_oracle(const GraphicalInequality& ineq, const Caps& caps = {});

// Certificate route: the linear system with one equation per maximum
// worth set T, sum_{v in T} y_v + sum_{e inside T} y_e = beta, has the
// solution y_v = a(v), y_e = -1; the inequality is facet-defining iff
// that solution is unique (system rank |V| + |E|). When rank is lower
// the certificate carries a second exact solution.
FacetCertificate fdg_certificate(const WeightedGraph& g, const Caps& caps = {});

struct FdgDecision {
  bool is_fdg = false;
  bool certificate_only = false;  // oracle out of reach, system result used
  FacetCertificate system;
  std::optional<FacetCertificate> oracle;
};

// Decides whether the unit-mode graphical inequality is a facet of the
// linear ordering polytope. Oracle verdict wins whenever 2|V| fits the
// oracle cap (or force_oracle asks for it); both results are reported.
FdgDecision is_fdg(const WeightedGraph& g, const Caps& caps = {}, bool force_oracle = false);

// Smallest valid right side of the strength-mode inequality: the exact
// maximum of its left side over all linear orders. Requires a critical
// facet-graph; for a 1-critical one the result must equal beta, which
// is asserted.
long long compute_gamma(const WeightedGraph& g, const Caps& caps = {});

}  // namespace critgraph
