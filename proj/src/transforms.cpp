#include "critgraph/transforms.hpp"

#include <algorithm>

#include "critgraph/polytopes.hpp"
#include "critgraph/stability.hpp"
#include "critgraph/worth.hpp"

namespace critgraph {

namespace {

struct GraphBuilder {
  std::vector<std::string> ids;
  std::vector<int> weights;
  std::vector<std::pair<int, int>> edge_list;

  explicit GraphBuilder(const WeightedGraph& g) {
    ids.reserve(g.n());
    weights.reserve(g.n());
    for (int v = 0; v < g.n(); ++v) {
      ids.push_back(g.id(v));
      weights.push_back(g.weight(v));
    }
    edge_list = g.edges();
  }

  int add_vertex(std::string id, int w) {
    while (std::find(ids.begin(), ids.end(), id) != ids.end()) id += "+";
    ids.push_back(std::move(id));
    weights.push_back(w);
    return (int)ids.size() - 1;
  }

  void drop_edge(int u, int v) {
    if (u > v) std::swap(u, v);
    auto it = std::find(edge_list.begin(), edge_list.end(), std::make_pair(u, v));
    if (it == edge_list.end()) throw PreconditionError("edge to subdivide is absent");
    edge_list.erase(it);
  }

  WeightedGraph build() { return WeightedGraph::build(ids, weights, edge_list); }
};

// Replace edge uv by a path u - p_1 - ... - p_{len-1} - v.
void subdivide_edge(GraphBuilder& b, const WeightedGraph& g, int u, int v, int len,
                    int interior_weight) {
  b.drop_edge(u, v);
  std::string stem = g.id(std::min(u, v)) + "-" + g.id(std::max(u, v));
  int prev = u;
  for (int k = 1; k < len; ++k) {
    int fresh = b.add_vertex(stem + "#" + std::to_string(k), interior_weight);
    b.edge_list.emplace_back(std::min(prev, fresh), std::max(prev, fresh));
    prev = fresh;
  }
  b.edge_list.emplace_back(std::min(prev, v), std::max(prev, v));
}

}  // namespace

WeightedGraph elementary_odd_subdivision(const WeightedGraph& g,
                                         const std::vector<std::pair<int, int>>& edge_list,
                                         const Caps& caps) {
  StrengthMap s = strength(g, caps);
  GraphBuilder b(g);
  for (auto [u, v] : edge_list) {
    int e = g.edge_index(u, v);
    if (e < 0) throw PreconditionError("elementary subdivision: edge is absent");
    if (s.by_edge[e] <= 0)
      throw PreconditionError("elementary subdivision needs positive strength on " +
                              g.id(u) + "," + g.id(v));
    subdivide_edge(b, g, u, v, 3, s.by_edge[e]);
  }
  return b.build();
}

WeightedGraph unit_odd_subdivision(const WeightedGraph& g,
                                   const std::map<std::pair<int, int>, int>& lengths) {
  GraphBuilder b(g);
  for (auto [edge, len] : lengths) {
    auto [u, v] = edge;
    if (g.edge_index(u, v) < 0) throw PreconditionError("unit subdivision: edge is absent");
    if (len < 3 || len % 2 == 0)
      throw PreconditionError("unit subdivision length must be odd and >= 3");
    subdivide_edge(b, g, u, v, len, 1);
  }
  return b.build();
}

namespace {

// Outer neighbors of the degree-2 path pair u, v; throws unless the
// configuration is an induced path u' u v v'.
std::pair<int, int> outer_pair(const WeightedGraph& g, int u, int v) {
  if (g.edge_index(u, v) < 0) throw PreconditionError("shrink: uv is not an edge");
  if (g.degree(u) != 2 || g.degree(v) != 2)
    throw PreconditionError("shrink: both endpoints must have degree 2");
  int up = __builtin_ctzll(g.adjacency(u) & ~(1ULL << v));
  int vp = __builtin_ctzll(g.adjacency(v) & ~(1ULL << u));
  if (up == vp) throw PreconditionError("shrink: outer neighbors coincide");
  if (g.has_edge(up, vp)) throw PreconditionError("shrink: outer neighbors already adjacent");
  return {up, vp};
}

WeightedGraph contract_path(const WeightedGraph& g, int u, int v, int up, int vp) {
  std::vector<std::string> ids;
  std::vector<int> weights;
  std::vector<int> remap(g.n(), -1);
  for (int w = 0; w < g.n(); ++w) {
    if (w == u || w == v) continue;
    remap[w] = (int)ids.size();
    ids.push_back(g.id(w));
    weights.push_back(g.weight(w));
  }
  std::vector<std::pair<int, int>> edge_list;
  for (auto [a, b] : g.edges()) {
    if (a == u || a == v || b == u || b == v) continue;
    edge_list.emplace_back(remap[a], remap[b]);
  }
  edge_list.emplace_back(std::min(remap[up], remap[vp]), std::max(remap[up], remap[vp]));
  return WeightedGraph::build(std::move(ids), std::move(weights), std::move(edge_list));
}

}  // namespace

WeightedGraph shrink_once(const WeightedGraph& g, int u, int v) {
  if (g.weight(u) != 1 || g.weight(v) != 1)
    throw PreconditionError("shrink: both path vertices must have weight 1");
  auto [up, vp] = outer_pair(g, u, v);
  return contract_path(g, u, v, up, vp);
}

WeightedGraph elementary_shrink_once(const WeightedGraph& g, int x, int y, const Caps& caps) {
  auto [up, vp] = outer_pair(g, x, y);
  if (g.weight(x) != g.weight(y))
    throw PreconditionError("elementary shrink: path vertices carry different weights");
  int s = alpha_value(g.without_edge(x, y), caps) - alpha_value(g, caps);
  if (g.weight(x) != s)
    throw PreconditionError("elementary shrink: path weight differs from edge strength");
  return contract_path(g, x, y, up, vp);
}

bool has_shrinkable_remote_edge(const WeightedGraph& g) {
  for (auto [u, v] : remote_edges(g)) {
    int up = __builtin_ctzll(g.adjacency(u) & ~(1ULL << v));
    int vp = __builtin_ctzll(g.adjacency(v) & ~(1ULL << u));
    if (up != vp && !g.has_edge(up, vp)) return true;
  }
  return false;
}

WeightedGraph to_one_cfg(const WeightedGraph& g, const Caps& caps) {
  FdgDecision in = is_fdg(g, caps);
  if (!in.is_fdg)
    throw PreconditionError("to_one_cfg requires a facet-defining graphical inequality");
  int lambda = subdefect(g, caps);

  std::map<std::pair<int, int>, int> plan;
  for (auto e : g.edges()) plan[e] = 3;
  WeightedGraph out = unit_odd_subdivision(g, plan);

  if (!is_one_cfg(out, caps))
    throw InconsistencyError("subdivided graph failed the 1-critical facet check");
  int defect = out.total_weight() - 2 * alpha_value(out, caps);
  if (defect != lambda)
    throw InconsistencyError("defect " + std::to_string(defect) +
                             " does not match input subdefect " + std::to_string(lambda));
  return out;
}

WeightedGraph shrink_to_basis(const WeightedGraph& g, const Caps& caps) {
  FdgDecision in = is_fdg(g, caps);
  if (!in.is_fdg)
    throw PreconditionError("shrink_to_basis requires a facet-defining graphical inequality");
  int lambda = subdefect(g, caps);

  WeightedGraph cur = g;
  while (true) {
    auto remotes = remote_edges(cur);
    if (remotes.empty()) break;
    int bu = -1, bv = -1;
    for (auto [u, v] : remotes) {
      int up = __builtin_ctzll(cur.adjacency(u) & ~(1ULL << v));
      int vp = __builtin_ctzll(cur.adjacency(v) & ~(1ULL << u));
      if (up != vp && !cur.has_edge(up, vp)) { bu = u; bv = v; break; }
    }
    if (bu < 0) {
      // Only a triangle of degree-2 vertices can block every remote
      // edge; anything larger contradicts the K2-cutset exclusion.
      if (cur.n() == 3) break;
      throw InconsistencyError("remote edges remain but none admits the induced path");
    }
    cur = shrink_once(cur, bu, bv);
    if (subdefect(cur, caps) != lambda)
      throw InconsistencyError("subdefect changed while shrinking");
  }
  return cur;
}

WeightedGraph cfg_reduce(const WeightedGraph& g, const Caps& caps) {
  if (!is_cfg(g, caps)) throw PreconditionError("cfg_reduce requires a critical facet-graph");
  int defect = g.total_weight() - 2 * alpha_value(g, caps);

  WeightedGraph cur = g;
  while (true) {
    int bx = -1, by = -1;
    StrengthMap s = strength(cur, caps);
    for (auto [x, y] : remote_edges(cur)) {
      int up = __builtin_ctzll(cur.adjacency(x) & ~(1ULL << y));
      int vp = __builtin_ctzll(cur.adjacency(y) & ~(1ULL << x));
      if (up == vp || cur.has_edge(up, vp)) continue;
      if (cur.weight(x) != cur.weight(y)) continue;
      if (cur.weight(x) != s.by_edge[cur.edge_index(x, y)]) continue;
      bx = x;
      by = y;
      break;
    }
    if (bx < 0) break;
    cur = elementary_shrink_once(cur, bx, by, caps);
    if (!is_cfg(cur, caps))
      throw InconsistencyError("reduced graph is no longer a critical facet-graph");
    if (cur.total_weight() - 2 * alpha_value(cur, caps) != defect)
      throw InconsistencyError("defect changed while reducing");
  }
  return cur;
}

}  // namespace critgraph
