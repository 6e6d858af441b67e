#include "critgraph/worth.hpp"

#include <algorithm>
#include <numeric>

#include "critgraph/stability.hpp"

namespace critgraph {

int worth_of(const WeightedGraph& g, uint64_t mask) {
  return g.set_weight(mask) - g.internal_edges(mask);
}

namespace {

void check_cap(const WeightedGraph& g, int cap, const char* what) {
  if (g.n() > cap)
    throw CapExceeded(std::string(what) + ": graph has " + std::to_string(g.n()) +
                      " vertices, cap is " + std::to_string(cap));
}

// Optimistic worth still reachable from vertices >= v: each future
// vertex adds at most its weight minus its edges into the current set,
// and skipping it adds zero. Edges between two future vertices only
// lower the true value, so this never underestimates.
int optimistic_rest(const WeightedGraph& g, int v, uint64_t chosen, uint64_t banned) {
  int s = 0;
  for (int u = v; u < g.n(); ++u) {
    if ((banned >> u) & 1) continue;
    int m = g.weight(u) - __builtin_popcountll(g.adjacency(u) & chosen);
    if (m > 0) s += m;
  }
  return s;
}

// DFS over include/exclude decisions in index order.
struct WorthSolver {
  const WeightedGraph& g;
  int best;

  void optimize(int v, uint64_t chosen, int cur) {
    best = std::max(best, cur);
    if (v >= g.n() || cur + optimistic_rest(g, v, chosen, 0) <= best) return;
    int gain = g.weight(v) - __builtin_popcountll(g.adjacency(v) & chosen);
    optimize(v + 1, chosen | (1ULL << v), cur + gain);
    optimize(v + 1, chosen, cur);
  }
};

struct WorthEnumerator {
  const WeightedGraph& g;
  int target;
  std::vector<uint64_t>& out;

  void run(int v, uint64_t chosen, int cur) {
    if (cur + optimistic_rest(g, v, chosen, 0) < target) return;
    if (v >= g.n()) {
      if (cur == target) out.push_back(chosen);
      return;
    }
    int gain = g.weight(v) - __builtin_popcountll(g.adjacency(v) & chosen);
    run(v + 1, chosen | (1ULL << v), cur + gain);
    run(v + 1, chosen, cur);
  }
};

struct ForcedWorthSolver {
  const WeightedGraph& g;
  uint64_t forced_in, forced_out;
  int best = INT32_MIN;

  void optimize(int v, uint64_t chosen, int cur) {
    while (v < g.n() && ((forced_in | forced_out) & (1ULL << v))) {
      if (forced_in & (1ULL << v)) {
        cur += g.weight(v) - __builtin_popcountll(g.adjacency(v) & chosen);
        chosen |= 1ULL << v;
      }
      ++v;
    }
    best = std::max(best, cur + pending(v, chosen));
    if (v >= g.n() || cur + optimistic_rest(g, v, chosen, forced_out) <= best) return;
    int gain = g.weight(v) - __builtin_popcountll(g.adjacency(v) & chosen);
    optimize(v + 1, chosen | (1ULL << v), cur + gain);
    optimize(v + 1, chosen, cur);
  }

  // Remaining forced_in vertices at positions >= v still to be added.
  int pending(int v, uint64_t chosen) const {
    int s = 0;
    uint64_t left = forced_in & ~((v >= 64) ? ~0ULL : ((1ULL << v) - 1));
    for (uint64_t m = left; m; m &= m - 1) {
      int u = __builtin_ctzll(m);
      s += g.weight(u) - __builtin_popcountll(g.adjacency(u) & chosen);
      chosen |= 1ULL << u;
    }
    return s;
  }

  void run() { optimize(0, 0, 0); }
};

}  // namespace

int beta_value(const WeightedGraph& g, const Caps& caps) {
  check_cap(g, caps.alpha_n, "beta");
  WorthSolver s{g, 0};  // empty set has worth 0
  s.optimize(0, 0, 0, g.total_weight());
  return s.best;
}

WorthReport beta_report(const WeightedGraph& g, const Caps& caps) {
  check_cap(g, caps.enum_n, "worth set enumeration");
  WorthReport rep;
  rep.beta = beta_value(g, caps);
  rep.subdefect = g.total_weight() - 2 * rep.beta;
  std::vector<uint64_t> masks;
  WorthEnumerator e{g, rep.beta, masks};
  e.run(0, 0, 0, g.total_weight());
  std::sort(masks.begin(), masks.end());
  rep.max_worth_sets.reserve(masks.size());
  for (uint64_t m : masks) rep.max_worth_sets.push_back(make_vertex_set(g, m));
  return rep;
}

int subdefect(const WeightedGraph& g, const Caps& caps) {
  return g.total_weight() - 2 * beta_value(g, caps);
}

int beta_value_forced(const WeightedGraph& g, uint64_t forced_in, uint64_t forced_out,
                      const Caps& caps) {
  check_cap(g, caps.alpha_n, "beta");
  if (forced_in & forced_out) throw PreconditionError("forced sets overlap");
  ForcedWorthSolver s{g, forced_in, forced_out};
  s.run();
  return s.best;
}

WorthSequenceBound sequence_bound(const WeightedGraph& g, const std::vector<uint64_t>& sets,
                                  const Caps& caps) {
  if (!g.unit_weights())
    throw PreconditionError("sequence_bound requires unit weights");
  if (!is_alpha_critical(g, /*require_connected=*/false, caps))
    throw PreconditionError("sequence_bound requires an alpha-critical graph");
  if (sets.empty()) throw PreconditionError("sequence_bound: empty sequence");

  int beta = beta_value(g, caps);
  for (size_t i = 0; i < sets.size(); ++i)
    if (worth_of(g, sets[i]) != beta)
      throw PreconditionError("sequence_bound: set " + std::to_string(i + 1) +
                              " is not a maximum worth set");
  uint64_t all = g.vertex_mask();
  uint64_t covered = 0, avoided = 0;
  for (uint64_t t : sets) {
    covered |= t;
    avoided |= all & ~t;
  }
  if (covered != all)
    throw PreconditionError("sequence_bound: some vertex lies in no set");
  if (avoided != all)
    throw PreconditionError("sequence_bound: some vertex lies in every set");

  WorthSequenceBound out;
  out.sequence.reserve(sets.size());
  for (uint64_t t : sets) out.sequence.push_back(make_vertex_set(g, t));

  int bound = 0;
  for (uint64_t t : sets) bound += g.internal_edges(t);
  uint64_t uni = sets[0], inter = sets[0];
  if (sets.size() >= 2) {
    uni |= sets[1];
    inter &= sets[1];
  }
  for (size_t j = 2; j < sets.size(); ++j) {
    uint64_t x = (uni & sets[j]) | (inter & ~sets[j]);
    out.x_sets.push_back(make_vertex_set(g, x));
    bound -= g.internal_edges(x);
    uni |= sets[j];
    inter &= sets[j];
  }
  out.bound = bound;
  out.defect = g.total_weight() - 2 * alpha_value(g, caps);
  if (out.bound > out.defect)
    throw InconsistencyError("sequence bound " + std::to_string(out.bound) +
                             " exceeds defect " + std::to_string(out.defect));
  return out;
}

uint64_t random_max_worth_set(const WeightedGraph& g, std::mt19937_64& rng, const Caps& caps) {
  int target = beta_value(g, caps);
  std::vector<int> order(g.n());
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  uint64_t in = 0, out = 0;
  for (int v : order) {
    if (beta_value_forced(g, in | (1ULL << v), out, caps) == target)
      in |= 1ULL << v;
    else
      out |= 1ULL << v;
  }
  if (worth_of(g, in) != target)
    throw InconsistencyError("greedy worth extraction missed the optimum");
  return in;
}

}  // namespace critgraph
