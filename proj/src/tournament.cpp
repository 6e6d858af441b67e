#include "critgraph/tournament.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "critgraph/rational.hpp"
#include "critgraph/stability.hpp"
#include "critgraph/transforms.hpp"
#include "critgraph/worth.hpp"

namespace critgraph {

Digraph transitive_tournament(int n) {
  if (n < 0 || n > kMaxVertices) throw PreconditionError("tournament order out of range");
  Digraph d(n);
  for (int i = 0; i < n; ++i)
    for (int k = i + 1; k < n; ++k) d.add(i, k);
  return d;
}

namespace {

int defect_of(const WeightedGraph& g, const Caps& caps) {
  return g.total_weight() - 2 * alpha_value(g, caps);
}

}  // namespace

WeightedGraph normalize_for_dg(const WeightedGraph& g, const Caps& caps) {
  if (!g.unit_weights()) throw PreconditionError("normalize_for_dg needs unit weights");
  if (!connected(g)) throw PreconditionError("normalize_for_dg needs a connected graph");
  if (g.max_degree() < 3)
    throw PreconditionError("normalize_for_dg needs a vertex of degree at least 3");
  if (!is_alpha_critical(g, false, caps))
    throw PreconditionError("normalize_for_dg needs an alpha-critical graph");
  const int base_defect = defect_of(g, caps);

  WeightedGraph cur = g;
  for (;;) {
    int v = -1;
    for (int i = 0; i < cur.n(); ++i)
      if (cur.degree(i) >= 4) { v = i; break; }
    if (v < 0) break;
    if (cur.n() + 2 > kMaxVertices) throw CapExceeded("normalize_for_dg exceeds the vertex cap");
    std::vector<int> nb;
    uint64_t adj = cur.adjacency(v);
    while (adj) {
      int u = std::countr_zero(adj);
      adj &= adj - 1;
      nb.push_back(u);
    }
    uint64_t n1 = 0, n2 = 0;
    const int half = (int)nb.size() / 2;
    for (int i = 0; i < (int)nb.size(); ++i)
      (i < half ? n1 : n2) |= 1ULL << nb[i];
    cur = split_vertex(cur, v, n1, n2);
  }

  std::map<std::pair<int, int>, int> lengths;
  for (auto [u, v] : cur.edges())
    if (cur.degree(u) == 3 && cur.degree(v) == 3) lengths[{u, v}] = 3;
  if (!lengths.empty()) {
    if (cur.n() + 2 * (int)lengths.size() > kMaxVertices)
      throw CapExceeded("normalize_for_dg exceeds the vertex cap");
    cur = unit_odd_subdivision(cur, lengths);
  }

  if (cur.max_degree() > 3)
    throw InconsistencyError("normalization left a vertex of degree above 3");
  for (auto [u, v] : cur.edges())
    if (cur.degree(u) == 3 && cur.degree(v) == 3)
      throw InconsistencyError("normalization left adjacent degree-3 vertices");
  if (!is_alpha_critical(cur, true, caps))
    throw InconsistencyError("normalization broke alpha-criticality");
  if (defect_of(cur, caps) != base_defect)
    throw InconsistencyError("normalization changed the defect");
  return cur;
}

DgConstruction build_dg(const WeightedGraph& g, const Caps& caps) {
  StableSelector pick = [](const WeightedGraph& h, const Caps& c) {
    return lex_min_max_stable(h, c);
  };
  return build_dg(g, pick, caps);
}

DgConstruction build_dg(const WeightedGraph& g, const StableSelector& pick, const Caps& caps) {
  if (!g.unit_weights()) throw PreconditionError("build_dg needs unit weights");
  if (!connected(g)) throw PreconditionError("build_dg needs a connected graph");
  if (g.max_degree() > 3) throw PreconditionError("build_dg needs maximum degree 3");
  if (!is_alpha_critical(g, false, caps))
    throw PreconditionError("build_dg needs an alpha-critical graph");

  DgConstruction out;
  out.graph = g;
  out.alpha = alpha_value(g, caps);
  out.defect = g.total_weight() - 2 * out.alpha;

  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) == 3) out.centers.push_back(v);
  if (out.centers.empty()) throw PreconditionError("build_dg needs a degree-3 vertex");
  for (int v : out.centers) {
    uint64_t adj = g.adjacency(v);
    while (adj) {
      int u = std::countr_zero(adj);
      adj &= adj - 1;
      if (g.degree(u) == 3)
        throw PreconditionError("build_dg needs pairwise non-adjacent degree-3 vertices");
    }
  }
  const int p = (int)out.centers.size();
  if (3 * p > kMaxVertices) throw CapExceeded("too many degree-3 vertices for the digraph");

  const auto& edges = g.edges();
  for (int v : out.centers) {
    std::array<int, 3> slots{};
    int filled = 0;
    uint64_t adj = g.adjacency(v);
    std::vector<int> eids;
    while (adj) {
      int u = std::countr_zero(adj);
      adj &= adj - 1;
      eids.push_back(g.edge_index(v, u));
    }
    std::sort(eids.begin(), eids.end());
    for (int e : eids) slots[filled++] = e;
    out.slot_edges.push_back(slots);
  }

  for (int i = 0; i < p; ++i) {
    std::array<uint64_t, 3> sets{};
    for (int j = 0; j < 3; ++j) {
      const int e = out.slot_edges[i][j];
      const auto [eu, ev] = edges[e];
      WeightedGraph reduced = g.without_edge(eu, ev);
      const uint64_t t = pick(reduced, caps);
      if (!reduced.is_stable(t) || reduced.set_weight(t) != out.alpha + 1)
        throw InconsistencyError("selector did not return a maximum stable set");
      if (((t >> eu) & 1) == 0 || ((t >> ev) & 1) == 0)
        throw InconsistencyError("a maximum stable set of G - e misses an end of e");
      if (worth_of(g, t) != out.alpha || g.internal_edges(t) != 1)
        throw InconsistencyError("T set is not a maximum worth set with one inside edge");
      sets[j] = t;
    }
    out.chosen.push_back(sets);
  }

  ColoredDigraph d;
  d.n = 3 * p;
  d.arcs.assign((size_t)d.n * d.n, ArcColor::none);
  d.labels.resize(d.n);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < 3; ++j) {
      const auto [eu, ev] = edges[out.slot_edges[i][j]];
      d.labels[3 * i + j] = g.id(eu) + "-" + g.id(ev);
    }
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < 3; ++j) {
      const uint64_t s1 = out.chosen[i][(j + 1) % 3];
      const uint64_t s2 = out.chosen[i][(j + 2) % 3];
      for (int k = 0; k < p; ++k) {
        if (k == i) continue;
        const uint64_t bit = 1ULL << out.centers[k];
        const bool in1 = (s1 & bit) != 0;
        const bool in2 = (s2 & bit) != 0;
        ArcColor c = ArcColor::none;
        if (in1 && in2) c = ArcColor::red;
        else if (!in1 && !in2) c = ArcColor::blue;
        if (c == ArcColor::none) continue;
        for (int l = 0; l < 3; ++l) d.set_arc(3 * i + j, 3 * k + l, c);
      }
    }
  out.dg = d;
  return out;
}

namespace {

void extend_mono(const ColoredDigraph& d, ArcColor color, std::vector<int>& cur,
                 uint64_t used_groups, TournamentResult& best) {
  if ((int)cur.size() > best.size) {
    best.size = (int)cur.size();
    best.vertices = cur;
    best.color = color;
  }
  for (int v = 0; v < d.n; ++v) {
    const int gv = d.group_of(v);
    if ((used_groups >> gv) & 1) continue;
    bool ok = true;
    for (int u : cur)
      if (d.arc(u, v) != color) { ok = false; break; }
    if (!ok) continue;
    cur.push_back(v);
    extend_mono(d, color, cur, used_groups | (1ULL << gv), best);
    cur.pop_back();
  }
}

}  // namespace

TournamentResult max_mono_admissible_tournament(const ColoredDigraph& d) {
  TournamentResult best;
  for (ArcColor color : {ArcColor::red, ArcColor::blue}) {
    TournamentResult r;
    r.color = color;
    std::vector<int> cur;
    extend_mono(d, color, cur, 0, r);
    if (r.size > best.size) best = r;
  }
  return best;
}

BlowUp blow_up(const Digraph& base,
               const std::map<std::pair<int, int>, std::array<bool, 3>>& subsets) {
  if (3 * base.n > kMaxVertices) throw CapExceeded("blow-up exceeds the vertex cap");
  BlowUp b;
  b.base = base;
  b.subsets = subsets;
  b.result = Digraph(3 * base.n);
  for (int v = 0; v < base.n; ++v)
    for (int w = 0; w < base.n; ++w) {
      if (!base.arc(v, w)) continue;
      auto it = subsets.find({v, w});
      if (it == subsets.end()) throw PreconditionError("blow-up subset missing for an arc");
      const auto& inc = it->second;
      if (!inc[0] && !inc[1] && !inc[2])
        throw PreconditionError("blow-up subsets must be nonempty");
      for (int j = 0; j < 3; ++j) {
        if (!inc[j]) continue;
        for (int l = 0; l < 3; ++l) b.result.add(3 * v + j, 3 * w + l);
      }
    }
  return b;
}

namespace {

bool extend_admissible(const Digraph& d, int k, std::vector<int>& cur, uint64_t used_groups) {
  if ((int)cur.size() == k) return true;
  for (int v = 0; v < d.n; ++v) {
    const int gv = v / 3;
    if ((used_groups >> gv) & 1) continue;
    bool ok = true;
    for (int u : cur)
      if (!d.arc(u, v)) { ok = false; break; }
    if (!ok) continue;
    cur.push_back(v);
    if (extend_admissible(d, k, cur, used_groups | (1ULL << gv))) return true;
    cur.pop_back();
  }
  return false;
}

}  // namespace

bool has_admissible_tournament(const Digraph& dprime, int k) {
  if (dprime.n % 3 != 0) throw PreconditionError("blown-up digraph order must be divisible by 3");
  if (k <= 0) return true;
  std::vector<int> cur;
  return extend_admissible(dprime, k, cur, 0);
}

long long a_sequence(int k) {
  if (k < 1) throw PreconditionError("a_sequence index starts at 1");
  long long a = 1;
  for (int i = 2; i <= k; ++i) {
    if (a > (std::numeric_limits<long long>::max() - 1) / 3) throw ArithmeticOverflow();
    a = 3 * a + 1;
  }
  return a;
}

}  // namespace critgraph
