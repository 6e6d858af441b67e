#include "critgraph/graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "json.hpp"

namespace critgraph {

WeightedGraph WeightedGraph::build(std::vector<std::string> ids, std::vector<int> weights,
                                   std::vector<std::pair<int, int>> edge_list) {
  if (ids.size() != weights.size())
    throw PreconditionError("vertex id and weight lists differ in length");
  if ((int)ids.size() > kMaxVertices)
    throw CapExceeded("graph exceeds " + std::to_string(kMaxVertices) + " vertices");
  int n = (int)ids.size();
  {
    std::set<std::string> seen;
    for (const auto& id : ids)
      if (!seen.insert(id).second) throw ParseError("duplicate vertex id: " + id);
  }
  for (int v = 0; v < n; ++v)
    if (weights[v] <= 0)
      throw ParseError("nonpositive weight on vertex " + ids[v]);

  WeightedGraph g;
  g.ids_ = std::move(ids);
  g.weights_ = std::move(weights);
  g.adj_.assign(n, 0);
  for (auto& [u, v] : edge_list) {
    if (u < 0 || u >= n || v < 0 || v >= n) throw ParseError("edge endpoint out of range");
    if (u == v) throw ParseError("loop on vertex " + g.ids_[u]);
    if (u > v) std::swap(u, v);
    if ((g.adj_[u] >> v) & 1)
      throw ParseError("parallel edge " + g.ids_[u] + "," + g.ids_[v]);
    g.adj_[u] |= 1ULL << v;
    g.adj_[v] |= 1ULL << u;
  }
  std::sort(edge_list.begin(), edge_list.end());
  g.edges_ = std::move(edge_list);
  return g;
}

int WeightedGraph::edge_index(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(u, v));
  if (it == edges_.end() || *it != std::make_pair(u, v)) return -1;
  return (int)(it - edges_.begin());
}

int WeightedGraph::vertex_index(const std::string& id) const {
  for (int v = 0; v < n(); ++v)
    if (ids_[v] == id) return v;
  return -1;
}

int WeightedGraph::total_weight() const {
  int s = 0;
  for (int w : weights_) s += w;
  return s;
}

int WeightedGraph::set_weight(uint64_t mask) const {
  int s = 0;
  for (uint64_t m = mask; m; m &= m - 1) s += weights_[__builtin_ctzll(m)];
  return s;
}

int WeightedGraph::internal_edges(uint64_t mask) const {
  int s = 0;
  for (uint64_t m = mask; m; m &= m - 1)
    s += __builtin_popcountll(adj_[__builtin_ctzll(m)] & mask);
  return s / 2;
}

bool WeightedGraph::is_stable(uint64_t mask) const {
  for (uint64_t m = mask; m; m &= m - 1)
    if (adj_[__builtin_ctzll(m)] & mask) return false;
  return true;
}

bool WeightedGraph::unit_weights() const {
  for (int w : weights_)
    if (w != 1) return false;
  return true;
}

int WeightedGraph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n(); ++v) d = std::max(d, degree(v));
  return d;
}

int WeightedGraph::min_degree() const {
  if (n() == 0) return 0;
  int d = kMaxVertices;
  for (int v = 0; v < n(); ++v) d = std::min(d, degree(v));
  return d;
}

WeightedGraph WeightedGraph::without_edge(int u, int v) const {
  if (!has_edge(u, v)) throw PreconditionError("edge to delete is absent");
  if (u > v) std::swap(u, v);
  WeightedGraph g = *this;
  g.adj_[u] &= ~(1ULL << v);
  g.adj_[v] &= ~(1ULL << u);
  g.edges_.erase(std::find(g.edges_.begin(), g.edges_.end(), std::make_pair(u, v)));
  return g;
}

VertexSet make_vertex_set(const WeightedGraph& g, uint64_t mask) {
  return VertexSet{mask, g.set_weight(mask), g.internal_edges(mask)};
}

std::vector<std::string> set_ids(const WeightedGraph& g, uint64_t mask) {
  std::vector<std::string> out;
  for (uint64_t m = mask; m; m &= m - 1) out.push_back(g.id(__builtin_ctzll(m)));
  return out;
}

bool connected_on(const WeightedGraph& g, uint64_t mask) {
  if (mask == 0) return true;
  uint64_t seen = 1ULL << __builtin_ctzll(mask);
  uint64_t frontier = seen;
  while (frontier) {
    uint64_t next = 0;
    for (uint64_t m = frontier; m; m &= m - 1)
      next |= g.adjacency(__builtin_ctzll(m));
    next &= mask & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == mask;
}

bool connected(const WeightedGraph& g) { return connected_on(g, g.vertex_mask()); }

std::vector<std::pair<int, int>> k2_cutsets(const WeightedGraph& g) {
  if (g.n() < 3 || !connected(g))
    throw PreconditionError("k2_cutsets requires a connected graph on >= 3 vertices");
  std::vector<std::pair<int, int>> out;
  for (const auto& [u, v] : g.edges()) {
    uint64_t rest = g.vertex_mask() & ~(1ULL << u) & ~(1ULL << v);
    if (rest != 0 && !connected_on(g, rest)) out.emplace_back(u, v);
  }
  return out;
}

std::vector<std::pair<int, int>> remote_edges(const WeightedGraph& g) {
  std::vector<std::pair<int, int>> out;
  for (const auto& [u, v] : g.edges())
    if (g.degree(u) == 2 && g.degree(v) == 2) out.emplace_back(u, v);
  return out;
}

namespace {

using Partition = std::vector<std::vector<int>>;

// Equitable refinement: split every cell by the multiset of neighbor
// counts into all current cells, until stable. Cell order depends only
// on isomorphism-invariant data.
void refine(const WeightedGraph& g, Partition& cells) {
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<uint64_t> cell_mask(cells.size(), 0);
    for (size_t c = 0; c < cells.size(); ++c)
      for (int v : cells[c]) cell_mask[c] |= 1ULL << v;
    Partition next;
    for (auto& cell : cells) {
      if (cell.size() == 1) {
        next.push_back(cell);
        continue;
      }
      std::vector<std::pair<std::vector<int>, int>> keyed;
      keyed.reserve(cell.size());
      for (int v : cell) {
        std::vector<int> key(cells.size());
        for (size_t c = 0; c < cells.size(); ++c)
          key[c] = __builtin_popcountll(g.adjacency(v) & cell_mask[c]);
        keyed.emplace_back(std::move(key), v);
      }
      std::stable_sort(keyed.begin(), keyed.end(),
                       [](const auto& a, const auto& b) { return a.first < b.first; });
      std::vector<int> cur{keyed[0].second};
      for (size_t i = 1; i < keyed.size(); ++i) {
        if (keyed[i].first != keyed[i - 1].first) {
          next.push_back(cur);
          cur.clear();
        }
        cur.push_back(keyed[i].second);
      }
      next.push_back(cur);
    }
    if (next.size() != cells.size()) changed = true;
    cells = std::move(next);
  }
}

std::string certificate_for(const WeightedGraph& g, const std::vector<int>& order) {
  int n = g.n();
  std::string cert;
  cert.reserve(1 + 4 * n + (n * n + 7) / 8);
  cert.push_back((char)n);
  for (int i = 0; i < n; ++i) {
    unsigned w = (unsigned)g.weight(order[i]);
    for (int b = 24; b >= 0; b -= 8) cert.push_back((char)((w >> b) & 0xff));
  }
  int bit = 0;
  char cur = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (g.has_edge(order[i], order[j])) cur |= (char)(1 << bit);
      if (++bit == 8) {
        cert.push_back(cur);
        cur = 0;
        bit = 0;
      }
    }
  if (bit) cert.push_back(cur);
  return cert;
}

struct CanonSearch {
  const WeightedGraph& g;
  std::string best_cert;
  std::vector<int> best_order;

  void walk(Partition cells) {
    refine(g, cells);
    int split = -1;
    for (size_t c = 0; c < cells.size(); ++c)
      if (cells[c].size() > 1) { split = (int)c; break; }
    if (split < 0) {
      std::vector<int> order;
      order.reserve(g.n());
      for (auto& cell : cells) order.push_back(cell[0]);
      std::string cert = certificate_for(g, order);
      if (best_cert.empty() || cert < best_cert) {
        best_cert = std::move(cert);
        best_order = std::move(order);
      }
      return;
    }
    for (int v : cells[split]) {
      Partition next;
      next.reserve(cells.size() + 1);
      for (size_t c = 0; c < cells.size(); ++c) {
        if ((int)c != split) {
          next.push_back(cells[c]);
          continue;
        }
        next.push_back({v});
        std::vector<int> rest;
        for (int u : cells[split])
          if (u != v) rest.push_back(u);
        next.push_back(std::move(rest));
      }
      walk(std::move(next));
    }
  }
};

}  // namespace

CanonicalForm canonical_form(const WeightedGraph& g) {
  int n = g.n();
  if (n == 0) return CanonicalForm{g, {}, std::string(1, '\0')};

  std::vector<int> verts(n);
  for (int v = 0; v < n; ++v) verts[v] = v;
  std::stable_sort(verts.begin(), verts.end(), [&](int a, int b) {
    return std::make_pair(g.weight(a), g.degree(a)) < std::make_pair(g.weight(b), g.degree(b));
  });
  Partition cells;
  for (int v : verts) {
    if (!cells.empty()) {
      int u = cells.back()[0];
      if (g.weight(u) == g.weight(v) && g.degree(u) == g.degree(v)) {
        cells.back().push_back(v);
        continue;
      }
    }
    cells.push_back({v});
  }

  CanonSearch search{g, {}, {}};
  search.walk(std::move(cells));

  std::vector<int> to_canonical(n);
  for (int i = 0; i < n; ++i) to_canonical[search.best_order[i]] = i;

  std::vector<std::string> ids(n);
  std::vector<int> weights(n);
  for (int i = 0; i < n; ++i) {
    ids[i] = g.id(search.best_order[i]);
    weights[i] = g.weight(search.best_order[i]);
  }
  std::vector<std::pair<int, int>> edge_list;
  edge_list.reserve(g.m());
  for (const auto& [u, v] : g.edges())
    edge_list.emplace_back(to_canonical[u], to_canonical[v]);

  return CanonicalForm{WeightedGraph::build(std::move(ids), std::move(weights), std::move(edge_list)),
                       std::move(to_canonical), std::move(search.best_cert)};
}

GraphDocument parse_graph(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("document root must be an object");
  if (!j.contains("vertices") || !j["vertices"].is_array())
    throw ParseError("missing vertices array");
  if (!j.contains("edges") || !j["edges"].is_array())
    throw ParseError("missing edges array");

  GraphDocument doc;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw ParseError("name must be a string");
    doc.name = j["name"].get<std::string>();
  }
  if (j.contains("metadata")) {
    if (!j["metadata"].is_object()) throw ParseError("metadata must be an object");
    for (auto& [k, v] : j["metadata"].items()) {
      if (!v.is_string()) throw ParseError("metadata values must be strings");
      doc.metadata[k] = v.get<std::string>();
    }
  }

  std::vector<std::string> ids;
  std::vector<int> weights;
  for (const auto& vj : j["vertices"]) {
    if (!vj.is_object() || !vj.contains("id") || !vj["id"].is_string())
      throw ParseError("each vertex needs a string id");
    ids.push_back(vj["id"].get<std::string>());
    int w = 1;
    if (vj.contains("weight")) {
      if (!vj["weight"].is_number_integer()) throw ParseError("weight must be an integer");
      w = vj["weight"].get<int>();
    }
    weights.push_back(w);
  }

  std::vector<std::pair<int, int>> edge_list;
  auto index_of = [&](const std::string& id) {
    for (size_t i = 0; i < ids.size(); ++i)
      if (ids[i] == id) return (int)i;
    throw ParseError("edge references unknown vertex: " + id);
  };
  for (const auto& ej : j["edges"]) {
    if (!ej.is_array() || ej.size() != 2 || !ej[0].is_string() || !ej[1].is_string())
      throw ParseError("each edge must be a pair of vertex ids");
    edge_list.emplace_back(index_of(ej[0].get<std::string>()),
                           index_of(ej[1].get<std::string>()));
  }

  doc.graph = WeightedGraph::build(std::move(ids), std::move(weights), std::move(edge_list));
  return doc;
}

std::string serialize_graph(const GraphDocument& doc) {
  nlohmann::json j;
  if (!doc.name.empty()) j["name"] = doc.name;
  if (!doc.metadata.empty()) {
    nlohmann::json mj = nlohmann::json::object();
    for (const auto& [k, v] : doc.metadata) mj[k] = v;
    j["metadata"] = mj;
  }
  j["vertices"] = nlohmann::json::array();
  for (int v = 0; v < doc.graph.n(); ++v)
    j["vertices"].push_back({{"id", doc.graph.id(v)}, {"weight", doc.graph.weight(v)}});
  j["edges"] = nlohmann::json::array();
  for (const auto& [u, v] : doc.graph.edges())
    j["edges"].push_back({doc.graph.id(u), doc.graph.id(v)});
  return j.dump(2) + "\n";
}

std::string to_dot(const WeightedGraph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (int v = 0; v < g.n(); ++v)
    out << "  \"" << g.id(v) << "\" [label=\"" << g.id(v) << ":" << g.weight(v) << "\"];\n";
  for (const auto& [u, v] : g.edges())
    out << "  \"" << g.id(u) << "\" -- \"" << g.id(v) << "\";\n";
  out << "}\n";
  return out.str();
}

}  // namespace critgraph
