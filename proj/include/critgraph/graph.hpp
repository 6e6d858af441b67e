#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace critgraph {

inline constexpr int kMaxVertices = 64;

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};
struct PreconditionError : std::runtime_error {
  explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};
struct CapExceeded : std::runtime_error {
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};
// A computation produced a result that contradicts an invariant the
// rest of the toolkit relies on. Surfaced, never swallowed.
struct InconsistencyError : std::runtime_error {
  explicit InconsistencyError(const std::string& what) : std::runtime_error(what) {}
};

// Size limits for the exponential kernels. All decisions stay exact;
// the caps only bound how large an instance each kernel accepts.
struct Caps {
  int alpha_n = 40;       // branch-and-bound optimizers
  int enum_n = 24;        // complete tight-set enumeration
  int oracle_nodes = 10;  // full linear-order scan
};

// Simple vertex-weighted graph on at most 64 vertices. Vertices are
// dense indices 0..n-1 carrying external string ids and positive
// integer weights; vertex subsets travel as uint64_t masks.
class WeightedGraph {
 public:
  WeightedGraph() = default;
  static WeightedGraph build(std::vector<std::string> ids, std::vector<int> weights,
                             std::vector<std::pair<int, int>> edge_list);

  int n() const { return (int)ids_.size(); }
  int m() const { return (int)edges_.size(); }
  const std::string& id(int v) const { return ids_[v]; }
  int weight(int v) const { return weights_[v]; }
  uint64_t adjacency(int v) const { return adj_[v]; }
  int degree(int v) const { return __builtin_popcountll(adj_[v]); }
  bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1; }
  // Lexicographically sorted pairs (u, v), u < v. Edge index = position.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  int edge_index(int u, int v) const;
  int vertex_index(const std::string& id) const;  // -1 when absent

  uint64_t vertex_mask() const { return n() == 64 ? ~0ULL : (1ULL << n()) - 1; }
  int total_weight() const;
  int set_weight(uint64_t mask) const;
  int internal_edges(uint64_t mask) const;
  bool is_stable(uint64_t mask) const;
  bool unit_weights() const;
  int max_degree() const;
  int min_degree() const;

  WeightedGraph without_edge(int u, int v) const;

 private:
  std::vector<std::string> ids_;
  std::vector<int> weights_;
  std::vector<uint64_t> adj_;
  std::vector<std::pair<int, int>> edges_;
};

// Vertex subset together with the two quantities every argument here
// turns on: its weight and its induced edge count.
struct VertexSet {
  uint64_t mask = 0;
  int weight = 0;
  int induced_edges = 0;
};
VertexSet make_vertex_set(const WeightedGraph& g, uint64_t mask);
std::vector<std::string> set_ids(const WeightedGraph& g, uint64_t mask);

bool connected(const WeightedGraph& g);
bool connected_on(const WeightedGraph& g, uint64_t mask);

// Adjacent pairs {v, w} whose removal disconnects the rest.
std::vector<std::pair<int, int>> k2_cutsets(const WeightedGraph& g);

// Edges with both endpoints of degree 2.
std::vector<std::pair<int, int>> remote_edges(const WeightedGraph& g);

// Canonical labeling by weight/degree partition refinement with
// backtracking over the remaining symmetry. Two weighted graphs are
// isomorphic (weights preserved) iff their certificates are equal.
struct CanonicalForm {
  WeightedGraph graph;             // input relabeled by the canonical order
  std::vector<int> to_canonical;   // old index -> canonical index
  std::string certificate;         // weights + adjacency bits, id-free
};
CanonicalForm canonical_form(const WeightedGraph& g);

struct GraphDocument {
  WeightedGraph graph;
  std::string name;
  std::map<std::string, std::string> metadata;
};

GraphDocument parse_graph(const std::string& text);
std::string serialize_graph(const GraphDocument& doc);
std::string to_dot(const WeightedGraph& g);

}  // namespace critgraph
