#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "critgraph/graph.hpp"

namespace critgraph {

struct Digraph {
  int n = 0;
  std::vector<uint64_t> out;

  Digraph() = default;
  explicit Digraph(int n_) : n(n_), out(n_, 0) {}
  bool arc(int v, int w) const { return (out[v] >> w) & 1; }
  void add(int v, int w) { out[v] |= 1ULL << w; }
};

// Transitive tournament on 0..n-1 (arc i -> k iff i < k).
Digraph transitive_tournament(int n);

enum class ArcColor : uint8_t { none = 0, red = 1, blue = 2 };

// Digraph on the slot vertices (group i, slot j) -> index 3i + j.
// Arcs carry a color; a group never sends arcs to itself.
struct ColoredDigraph {
  int n = 0;
  std::vector<std::string> labels;
  std::vector<ArcColor> arcs;  // row major n x n

  int groups() const { return n / 3; }
  int group_of(int v) const { return v / 3; }
  ArcColor arc(int a, int b) const { return arcs[(size_t)a * n + b]; }
  void set_arc(int a, int b, ArcColor c) { arcs[(size_t)a * n + b] = c; }
};

// Split every vertex of degree >= 4 (lowest index first, the lower
// half of its neighborhood forming n1), then apply a unit length-3
// subdivision to every edge joining two degree-3 vertices. Keeps the
// graph alpha-critical with the same defect; the output has maximum
// degree 3 with its degree-3 vertices pairwise non-adjacent.
WeightedGraph normalize_for_dg(const WeightedGraph& g, const Caps& caps = {});

using StableSelector = std::function<uint64_t(const WeightedGraph& g_minus_e, const Caps&)>;

struct DgConstruction {
  WeightedGraph graph;
  int alpha = 0;
  int defect = 0;
  std::vector<int> centers;                      // degree-3 vertices, ascending
  std::vector<std::array<int, 3>> slot_edges;    // edge index per (group, slot)
  std::vector<std::array<uint64_t, 3>> chosen;   // T sets per (group, slot)
  ColoredDigraph dg;
};

// For each degree-3 vertex v_i with incident edges e_{i,0..2} (edge-id
// order) pick T_{i,j}, a maximum stable set of G - e_{i,j}; it always
// contains both ends of e_{i,j} and is a maximum worth set whose only
// inside edge is e_{i,j}. Arcs: slot (i,j) sends red arcs to all of
// group k when v_k lies in both T_{i,j+1} and T_{i,j+2} (indices mod
// 3), blue arcs when it lies in neither.
DgConstruction build_dg(const WeightedGraph& g, const Caps& caps = {});
DgConstruction build_dg(const WeightedGraph& g, const StableSelector& pick,
                        const Caps& caps = {});

struct TournamentResult {
  int size = 0;
  std::vector<int> vertices;  // witness sequence, forward arcs all colored
  ArcColor color = ArcColor::none;
};

// Largest single-color acyclic tournament using at most one slot per
// group. Exact backtracking over vertex sequences.
TournamentResult max_mono_admissible_tournament(const ColoredDigraph& d);

struct BlowUp {
  Digraph base;
  std::map<std::pair<int, int>, std::array<bool, 3>> subsets;
  Digraph result;  // 3 copies per base vertex, copy j of v = 3v + j
};

// Replace vertex v by v_0, v_1, v_2; each base arc (v, w) with chosen
// nonempty subset I yields arcs (v_i, w_l) for i in I and all l.
BlowUp blow_up(const Digraph& base, const std::map<std::pair<int, int>, std::array<bool, 3>>& subsets);

// Does the blown-up digraph contain an acyclic tournament of order k
// using at most one copy per base vertex?
bool has_admissible_tournament(const Digraph& dprime, int k);

// a_1 = 1, a_k = 3 a_{k-1} + 1: order thresholds that force an
// admissible acyclic tournament of order k in every blow-up.
long long a_sequence(int k);

}  // namespace critgraph
