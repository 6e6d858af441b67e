#include "critgraph/polytopes.hpp"

#include <algorithm>
#include <numeric>

#include "critgraph/stability.hpp"
#include "critgraph/worth.hpp"

namespace critgraph {

namespace {

std::optional<std::vector<Rat>> stab_witness(const IntMatrix& m, const WeightedGraph& g,
                                             int alpha) {
  auto z = kernel_vector(m);
  if (!z) return std::nullopt;
  std::vector<Rat> y(g.n());
  for (int v = 0; v < g.n(); ++v) y[v] = Rat(g.weight(v)) + (*z)[v];
  // The witness must satisfy every tight equation yet differ from a.
  bool differs = false;
  for (int v = 0; v < g.n(); ++v)
    if (y[v] != Rat(g.weight(v))) differs = true;
  if (!differs) throw InconsistencyError("stab witness collapsed to the trivial solution");
  for (int r = 0; r < m.rows; ++r) {
    Rat lhs(0);
    for (int c = 0; c < m.cols; ++c)
      if (m.at(r, c) != 0) lhs += y[c] * Rat(m.at(r, c));
    if (lhs != Rat(alpha))
      throw InconsistencyError("stab witness violates a tight equation");
  }
  return y;
}

}  // namespace

FacetCertificate is_facet_graph(const WeightedGraph& g, const Caps& caps) {
  if (g.n() < 3) throw PreconditionError("is_facet_graph requires |V| >= 3");
  if (!connected(g)) throw PreconditionError("is_facet_graph requires a connected graph");
  StabilityReport rep = alpha_report(g, caps);

  FacetCertificate cert;
  cert.kind = CertKind::stab;
  cert.required_rank = g.n();
  cert.tight_count = (long long)rep.max_stable_sets.size();
  cert.tight_sets = rep.max_stable_sets;
  cert.rhs = rep.alpha;
  cert.max_lhs = rep.alpha;

  IntMatrix m((int)rep.max_stable_sets.size(), g.n());
  for (int r = 0; r < m.rows; ++r)
    for (uint64_t s = rep.max_stable_sets[r].mask; s; s &= s - 1)
      m.at(r, __builtin_ctzll(s)) = 1;
  cert.matrix_rank = bareiss_rank(m);
  cert.is_facet = cert.matrix_rank == cert.required_rank;
  if (!cert.is_facet) cert.witness = stab_witness(m, g, rep.alpha);
  return cert;
}

bool is_cfg(const WeightedGraph& g, const Caps& caps) {
  if (g.n() < 3 || !connected(g)) return false;
  if (!is_critical_weighted(g, caps)) return false;
  return is_facet_graph(g, caps).is_facet;
}

bool is_k_critical_cfg(const WeightedGraph& g, int k, const Caps& caps) {
  if (!is_cfg(g, caps)) return false;
  return strength(g, caps).max_strength <= k;
}

bool is_one_cfg(const WeightedGraph& g, const Caps& caps) {
  if (!is_cfg(g, caps)) return false;
  StrengthMap s = strength(g, caps);
  return s.min_strength == 1 && s.max_strength == 1;
}

long long GraphicalInequality::evaluate(const std::vector<int>& pos) const {
  long long lhs = 0;
  for (int v = 0; v < base_n; ++v)
    if (pos[v] < pos[v + base_n]) lhs += vertex_coeff[v];
  for (size_t e = 0; e < base_edges.size(); ++e) {
    auto [u, w] = base_edges[e];
    long long c = edge_coeff[e];
    if (pos[u] < pos[w + base_n]) lhs -= c;
    if (pos[w] < pos[u + base_n]) lhs -= c;
  }
  return lhs;
}

GraphicalInequality graphical_inequality(const WeightedGraph& g, IneqMode mode,
                                         const Caps& caps) {
  if (g.n() < 3) throw PreconditionError("graphical inequality requires |V| >= 3");
  GraphicalInequality q;
  q.mode = mode;
  q.base_n = g.n();
  q.node_ids.resize(2 * g.n());
  for (int v = 0; v < g.n(); ++v) {
    q.node_ids[v] = g.id(v);
    q.node_ids[v + g.n()] = g.id(v) + "'";
  }
  q.vertex_coeff.resize(g.n());
  for (int v = 0; v < g.n(); ++v) q.vertex_coeff[v] = g.weight(v);
  q.base_edges = g.edges();
  if (mode == IneqMode::unit_coefficients) {
    q.edge_coeff.assign(g.m(), 1);
    q.rhs = beta_value(g, caps);
  } else {
    StrengthMap s = strength(g, caps);
    q.edge_coeff = s.by_edge;
    q.rhs = std::nullopt;  // resolved by compute_gamma
  }
  return q;
}

namespace {

int pair_index(int i, int j, int q) {
  // i < j, unordered pairs of 0..q-1 in lexicographic order
  return i * (2 * q - i - 1) / 2 + (j - i - 1);
}

std::vector<long long> incidence_of(const std::vector<int>& pos, int q) {
  std::vector<long long> x((size_t)q * (q - 1) / 2, 0);
  for (int i = 0; i < q; ++i)
    for (int j = i + 1; j < q; ++j)
      if (pos[i] < pos[j]) x[pair_index(i, j, q)] = 1;
  return x;
}

// Exact maximum of the left side over all q! orders; optionally also
// the affine rank of the tight incidence vectors. The max scan always
// completes; the rank basis stops growing once full.
struct OrderScan {
  long long max_lhs = INT64_MIN;
  long long hit_count = 0;                 // orders achieving level
  std::vector<std::vector<int>> basis_orders;
  int affine_rank = 0;

  void run(const GraphicalInequality& ineq, std::optional<long long> level_opt) {
    int q = ineq.nodes();
    int dims = q * (q - 1) / 2;
    std::vector<int> order(q);
    std::iota(order.begin(), order.end(), 0);
    std::vector<int> pos(q);
    bool collect = level_opt.has_value();
    long long level = collect ? *level_opt : 0;
    std::optional<std::vector<long long>> t0;
    RankAccumulator acc(dims);
    do {
      for (int k = 0; k < q; ++k) pos[order[k]] = k;
      long long lhs = ineq.evaluate(pos);
      max_lhs = std::max(max_lhs, lhs);
      if (collect && lhs == level) {
        ++hit_count;
        if (!t0) {
          t0 = incidence_of(pos, q);
          basis_orders.push_back(order);
        } else if (acc.rank() < dims - 1) {
          std::vector<long long> diff = incidence_of(pos, q);
          for (int i = 0; i < dims; ++i) diff[i] -= (*t0)[i];
          if (acc.add(diff)) basis_orders.push_back(order);
        }
      }
    } while (std::next_permutation(order.begin(), order.end()));
    affine_rank = t0 ? acc.rank() + 1 : 0;
  }
};

}  // namespace

FacetCertificate lop_oracle(const GraphicalInequality& ineq, const Caps& caps) {
  if (!ineq.rhs)
    throw PreconditionError("lop_oracle needs a resolved right side");
  if (ineq.nodes() > caps.oracle_nodes)
    throw CapExceeded("lop oracle: " + std::to_string(ineq.nodes()) +
                      " nodes exceed cap " + std::to_string(caps.oracle_nodes));

  int q = ineq.nodes();
  FacetCertificate cert;
  cert.kind = CertKind::lop_oracle;
  cert.required_rank = q * (q - 1) / 2;
  cert.rhs = *ineq.rhs;

  OrderScan scan;
  scan.run(ineq, *ineq.rhs);
  cert.max_lhs = scan.max_lhs;
  cert.valid = scan.max_lhs <= cert.rhs;
  cert.tight = scan.max_lhs == cert.rhs;
  cert.tight_count = scan.hit_count;
  cert.matrix_rank = scan.affine_rank;
  cert.basis_orders = scan.basis_orders;
  cert.is_facet = cert.valid && cert.tight && cert.matrix_rank == cert.required_rank;
  return cert;
}

FacetCertificate fdg_certificate(const WeightedGraph& g, const Caps& caps) {
  if (g.n() < 3) throw PreconditionError("fdg_certificate requires |V| >= 3");
  if (!connected(g)) throw PreconditionError("fdg_certificate requires a connected graph");
  WorthReport rep = beta_report(g, caps);

  FacetCertificate cert;
  cert.kind = CertKind::lop_system;
  cert.required_rank = g.n() + g.m();
  cert.tight_count = (long long)rep.max_worth_sets.size();
  cert.tight_sets = rep.max_worth_sets;
  cert.rhs = rep.beta;
  cert.max_lhs = rep.beta;

  int cols = g.n() + g.m();
  IntMatrix m((int)rep.max_worth_sets.size(), cols);
  for (int r = 0; r < m.rows; ++r) {
    uint64_t t = rep.max_worth_sets[r].mask;
    for (uint64_t s = t; s; s &= s - 1) m.at(r, __builtin_ctzll(s)) = 1;
    for (int e = 0; e < g.m(); ++e) {
      auto [u, v] = g.edges()[e];
      if (((t >> u) & 1) && ((t >> v) & 1)) m.at(r, g.n() + e) = 1;
    }
  }
  cert.matrix_rank = bareiss_rank(m);
  cert.is_facet = cert.matrix_rank == cert.required_rank;
  if (!cert.is_facet) {
    auto z = kernel_vector(m);
    if (!z) throw InconsistencyError("deficient rank but trivial kernel");
    std::vector<Rat> y(cols);
    bool differs = false;
    for (int c = 0; c < cols; ++c) {
      Rat trivial = c < g.n() ? Rat(g.weight(c)) : Rat(-1);
      y[c] = trivial + (*z)[c];
      if (y[c] != trivial) differs = true;
    }
    if (!differs) throw InconsistencyError("fdg witness collapsed to the trivial solution");
    for (int r = 0; r < m.rows; ++r) {
      Rat lhs(0);
      for (int c = 0; c < cols; ++c)
        if (m.at(r, c) != 0) lhs += y[c];
      if (lhs != Rat(rep.beta))
        throw InconsistencyError("fdg witness violates a tight equation");
    }
    cert.witness = std::move(y);
  }
  return cert;
}

FdgDecision is_fdg(const WeightedGraph& g, const Caps& caps, bool force_oracle) {
  FdgDecision d;
  d.system = fdg_certificate(g, caps);
  bool within_cap = 2 * g.n() <= caps.oracle_nodes;
  if (within_cap || force_oracle) {
    GraphicalInequality ineq = graphical_inequality(g, IneqMode::unit_coefficients, caps);
    Caps oracle_caps = caps;
    if (force_oracle) oracle_caps.oracle_nodes = std::max(caps.oracle_nodes, 2 * g.n());
    d.oracle = lop_oracle(ineq, oracle_caps);
    d.is_fdg = d.oracle->is_facet;
    d.certificate_only = false;
  } else {
    d.is_fdg = d.system.is_facet;
    d.certificate_only = true;
  }
  return d;
}

long long compute_gamma(const WeightedGraph& g, const Caps& caps) {
  if (!is_cfg(g, caps))
    throw PreconditionError("compute_gamma requires a critical facet-graph");
  GraphicalInequality ineq = graphical_inequality(g, IneqMode::strength_coefficients, caps);
  if (ineq.nodes() > caps.oracle_nodes)
    throw CapExceeded("compute_gamma: " + std::to_string(ineq.nodes()) +
                      " nodes exceed cap " + std::to_string(caps.oracle_nodes));
  OrderScan scan;
  scan.run(ineq, std::nullopt);
  long long gamma = scan.max_lhs;
  if (is_one_cfg(g, caps) && gamma != beta_value(g, caps))
    throw InconsistencyError("gamma " + std::to_string(gamma) +
                             " differs from beta on a 1-critical facet-graph");
  return gamma;
}

}  // namespace critgraph
