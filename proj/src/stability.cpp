#include "critgraph/stability.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <numeric>

namespace critgraph {

namespace {

struct AlphaSolver {
  const WeightedGraph& g;
  int best = 0;

  int weight_of(uint64_t mask) const { return g.set_weight(mask); }

  void optimize(uint64_t cand, int cur) {
    best = std::max(best, cur);
    if (cand == 0) return;
    if (cur + weight_of(cand) <= best) return;
    int pick = -1, pick_deg = -1;
    for (uint64_t m = cand; m; m &= m - 1) {
      int v = __builtin_ctzll(m);
      int d = __builtin_popcountll(g.adjacency(v) & cand);
      if (d > pick_deg) { pick_deg = d; pick = v; }
    }
    optimize(cand & ~g.adjacency(pick) & ~(1ULL << pick), cur + g.weight(pick));
    if (pick_deg > 0) optimize(cand & ~(1ULL << pick), cur);
    // pick_deg == 0: an isolated candidate always enters an optimum
  }
};

struct AlphaEnumerator {
  const WeightedGraph& g;
  int target;
  std::vector<uint64_t>& out;

  void run(uint64_t cand, int cur, uint64_t chosen) {
    if (cur + g.set_weight(cand) < target) return;
    if (cand == 0) {
      if (cur == target) out.push_back(chosen);
      return;
    }
    int v = __builtin_ctzll(cand);
    run(cand & ~g.adjacency(v) & ~(1ULL << v), cur + g.weight(v), chosen | (1ULL << v));
    run(cand & ~(1ULL << v), cur, chosen);
  }
};

void check_alpha_cap(const WeightedGraph& g, const Caps& caps) {
  if (g.n() > caps.alpha_n)
    throw CapExceeded("alpha: graph has " + std::to_string(g.n()) +
                      " vertices, cap is " + std::to_string(caps.alpha_n));
}

}  // namespace

int alpha_value(const WeightedGraph& g, const Caps& caps) {
  check_alpha_cap(g, caps);
  AlphaSolver s{g};
  s.optimize(g.vertex_mask(), 0);
  return s.best;
}

StabilityReport alpha_report(const WeightedGraph& g, const Caps& caps) {
  check_alpha_cap(g, caps);
  if (g.n() > caps.enum_n)
    throw CapExceeded("stable set enumeration: graph has " + std::to_string(g.n()) +
                      " vertices, cap is " + std::to_string(caps.enum_n));
  StabilityReport rep;
  rep.alpha = alpha_value(g, caps);
  rep.defect = g.total_weight() - 2 * rep.alpha;
  std::vector<uint64_t> masks;
  AlphaEnumerator e{g, rep.alpha, masks};
  e.run(g.vertex_mask(), 0, 0);
  std::sort(masks.begin(), masks.end());
  rep.max_stable_sets.reserve(masks.size());
  for (uint64_t m : masks) rep.max_stable_sets.push_back(make_vertex_set(g, m));
  return rep;
}

int alpha_value_forced(const WeightedGraph& g, uint64_t forced_in, uint64_t forced_out,
                       const Caps& caps) {
  check_alpha_cap(g, caps);
  if (!g.is_stable(forced_in))
    throw PreconditionError("forced_in is not a stable set");
  if (forced_in & forced_out)
    throw PreconditionError("forced_in and forced_out overlap");
  uint64_t blocked = forced_out;
  for (uint64_t m = forced_in; m; m &= m - 1)
    blocked |= g.adjacency(__builtin_ctzll(m));
  if (blocked & forced_in)
    throw PreconditionError("forced_out clashes with forced_in neighborhood");
  AlphaSolver s{g};
  s.optimize(g.vertex_mask() & ~forced_in & ~blocked, 0);
  return s.best + g.set_weight(forced_in);
}

StrengthMap strength(const WeightedGraph& g, const Caps& caps, int jobs) {
  check_alpha_cap(g, caps);
  int base = alpha_value(g, caps);
  int m = g.m();
  StrengthMap out;
  out.by_edge.assign(m, 0);
  auto work = [&](int e) {
    const auto& [u, v] = g.edges()[e];
    out.by_edge[e] = alpha_value(g.without_edge(u, v), caps) - base;
  };
  if (jobs <= 1 || m < 2) {
    for (int e = 0; e < m; ++e) work(e);
  } else {
    std::vector<std::future<void>> futs;
    std::atomic<int> next{0};
    int workers = std::min(jobs, m);
    for (int t = 0; t < workers; ++t)
      futs.push_back(std::async(std::launch::async, [&] {
        for (int e = next.fetch_add(1); e < m; e = next.fetch_add(1)) work(e);
      }));
    for (auto& f : futs) f.get();
  }
  if (m > 0) {
    out.min_strength = *std::min_element(out.by_edge.begin(), out.by_edge.end());
    out.max_strength = *std::max_element(out.by_edge.begin(), out.by_edge.end());
  }
  return out;
}

bool is_alpha_critical(const WeightedGraph& g, bool require_connected, const Caps& caps) {
  if (!g.unit_weights())
    throw PreconditionError("is_alpha_critical requires unit weights");
  if (require_connected && !connected(g)) return false;
  return is_critical_weighted(g, caps);
}

bool is_critical_weighted(const WeightedGraph& g, const Caps& caps) {
  check_alpha_cap(g, caps);
  int base = alpha_value(g, caps);
  for (const auto& [u, v] : g.edges())
    if (alpha_value(g.without_edge(u, v), caps) <= base) return false;
  return true;
}

WeightedGraph split_vertex(const WeightedGraph& g, int v, uint64_t n1, uint64_t n2) {
  if (!g.unit_weights()) throw PreconditionError("split_vertex requires unit weights");
  if (v < 0 || v >= g.n()) throw PreconditionError("split_vertex: no such vertex");
  if (g.degree(v) < 4) throw PreconditionError("split_vertex requires degree >= 4");
  if ((n1 | n2) != g.adjacency(v) || (n1 & n2) != 0)
    throw PreconditionError("split_vertex: n1, n2 must partition the neighborhood");
  if (__builtin_popcountll(n1) < 2 || __builtin_popcountll(n2) < 2)
    throw PreconditionError("split_vertex: both parts need >= 2 vertices");

  int n = g.n();
  std::vector<std::string> ids;
  std::vector<int> weights;
  std::vector<int> remap(n, -1);
  for (int u = 0; u < n; ++u) {
    if (u == v) continue;
    remap[u] = (int)ids.size();
    ids.push_back(g.id(u));
    weights.push_back(g.weight(u));
  }
  auto fresh = [&](const std::string& suffix) {
    std::string name = g.id(v) + suffix;
    while (std::find(ids.begin(), ids.end(), name) != ids.end()) name += "+";
    return name;
  };
  int v1 = (int)ids.size();
  ids.push_back(fresh("#1"));
  weights.push_back(1);
  int v2 = (int)ids.size();
  ids.push_back(fresh("#2"));
  weights.push_back(1);
  int vp = (int)ids.size();
  ids.push_back(fresh("#p"));
  weights.push_back(1);

  std::vector<std::pair<int, int>> edge_list;
  for (const auto& [a, b] : g.edges()) {
    if (a == v || b == v) continue;
    edge_list.emplace_back(remap[a], remap[b]);
  }
  for (uint64_t m = n1; m; m &= m - 1)
    edge_list.emplace_back(v1, remap[__builtin_ctzll(m)]);
  for (uint64_t m = n2; m; m &= m - 1)
    edge_list.emplace_back(v2, remap[__builtin_ctzll(m)]);
  edge_list.emplace_back(v1, vp);
  edge_list.emplace_back(v2, vp);
  return WeightedGraph::build(std::move(ids), std::move(weights), std::move(edge_list));
}

namespace {

uint64_t greedy_max_stable(const WeightedGraph& g, const std::vector<int>& order,
                           const Caps& caps) {
  int target = alpha_value(g, caps);
  uint64_t in = 0, out = 0;
  for (int v : order) {
    if ((in | out) & (1ULL << v)) continue;
    if (alpha_value_forced(g, in | (1ULL << v), out, caps) == target) {
      in |= 1ULL << v;
      out |= g.adjacency(v);
    } else {
      out |= 1ULL << v;
    }
  }
  if (g.set_weight(in) != target)
    throw InconsistencyError("greedy stable extraction missed the optimum");
  return in;
}

}  // namespace

uint64_t lex_min_max_stable(const WeightedGraph& g, const Caps& caps) {
  // First set in increasing mask order: walk bits from the top and
  // keep a vertex out whenever some optimum avoids it.
  int target = alpha_value(g, caps);
  uint64_t in = 0, out = 0;
  for (int v = g.n() - 1; v >= 0; --v) {
    if ((in | out) & (1ULL << v)) continue;
    if (alpha_value_forced(g, in, out | (1ULL << v), caps) == target) {
      out |= 1ULL << v;
    } else {
      in |= 1ULL << v;
      out |= g.adjacency(v);
    }
  }
  if (g.set_weight(in) != target)
    throw InconsistencyError("lexicographic stable extraction missed the optimum");
  return in;
}

uint64_t random_max_stable(const WeightedGraph& g, std::mt19937_64& rng, const Caps& caps) {
  std::vector<int> order(g.n());
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  return greedy_max_stable(g, order, caps);
}

}  // namespace critgraph
