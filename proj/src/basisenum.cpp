#include "critgraph/basisenum.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>

#include "critgraph/polytopes.hpp"
#include "critgraph/stability.hpp"
#include "critgraph/transforms.hpp"
#include "critgraph/worth.hpp"

namespace critgraph {

namespace {

std::vector<std::string> numbered_ids(int n) {
  std::vector<std::string> ids;
  ids.reserve(n);
  for (int i = 1; i <= n; ++i) ids.push_back(std::to_string(i));
  return ids;
}

WeightedGraph with_weights(const WeightedGraph& g, const std::vector<int>& w) {
  return WeightedGraph::build(numbered_ids(g.n()), w, g.edges());
}

}  // namespace

std::vector<WeightedGraph> connected_structures(int max_vertices, int max_degree,
                                                const Caps& caps) {
  if (max_vertices < 1) throw PreconditionError("max_vertices must be positive");
  if (max_vertices > caps.enum_n) throw CapExceeded("structure enumeration above the cap");
  if (max_degree < 1) return {WeightedGraph::build({"1"}, {1}, {})};

  std::vector<WeightedGraph> all;
  std::vector<WeightedGraph> level;
  level.push_back(WeightedGraph::build({"1"}, {1}, {}));
  all.push_back(level.front());

  for (int k = 2; k <= max_vertices; ++k) {
    std::set<std::string> seen;
    std::vector<WeightedGraph> next;
    for (const WeightedGraph& g : level) {
      std::vector<int> open;  // vertices with spare degree
      for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) < max_degree) open.push_back(v);
      const int limit = std::min<int>((int)open.size(), max_degree);
      // nonempty attachment sets of size <= max_degree
      for (uint64_t sub = 1; sub < (1ULL << open.size()); ++sub) {
        if (std::popcount(sub) > limit) continue;
        auto edges = g.edges();
        for (int i = 0; i < (int)open.size(); ++i)
          if ((sub >> i) & 1) edges.emplace_back(open[i], k - 1);
        WeightedGraph h =
            WeightedGraph::build(numbered_ids(k), std::vector<int>(k, 1), edges);
        CanonicalForm cf = canonical_form(h);
        if (seen.insert(cf.certificate).second) next.push_back(cf.graph);
      }
    }
    for (const WeightedGraph& g : next) all.push_back(g);
    level = std::move(next);
  }
  std::stable_sort(all.begin(), all.end(), [](const WeightedGraph& a, const WeightedGraph& b) {
    if (a.n() != b.n()) return a.n() < b.n();
    if (a.m() != b.m()) return a.m() < b.m();
    return canonical_form(a).certificate < canonical_form(b).certificate;
  });
  return all;
}

BasisCatalog enumerate_basis(const SearchSpace& space, const Caps& caps) {
  if (space.defect < 1) throw PreconditionError("basis defect must be positive");
  const int d = space.defect;
  const int degree_bound = (d == 1) ? 2 * d : 2 * d - 1;
  const int weight_bound = d;

  BasisCatalog catalog;
  catalog.space = space;
  std::set<std::string> seen_members;
  std::set<std::string> seen_weighted;

  const auto structures = connected_structures(space.max_vertices, degree_bound, caps);
  for (const WeightedGraph& s : structures) {
    ++catalog.structures_examined;
    if (s.n() < 3) continue;
    // shrinkability depends on degrees and adjacency only, so a whole
    // structure can be dismissed before any weighting is tried
    if (has_shrinkable_remote_edge(s)) continue;

    std::vector<int> w(s.n(), 1);
    for (;;) {
      ++catalog.weightings_examined;
      bool degrees_ok = true;
      for (int v = 0; v < s.n(); ++v)
        if (s.degree(v) > w[v] + d) { degrees_ok = false; break; }
      if (degrees_ok) {
        WeightedGraph g = with_weights(s, w);
        const bool defect_matches =
            space.target == BasisTarget::cfg
                ? g.total_weight() - 2 * alpha_value(g, caps) == d
                : subdefect(g, caps) == d;
        if (defect_matches) {
          CanonicalForm cf = canonical_form(g);
          if (seen_weighted.insert(cf.certificate).second) {
            bool member = false;
            bool oracle_confirmed = true;
            if (space.target == BasisTarget::cfg) {
              member = is_one_cfg(g, caps);
            } else {
              FdgDecision dec = is_fdg(g, caps);
              member = dec.is_fdg;
              oracle_confirmed = !dec.certificate_only;
            }
            if (member) {
              for (int v = 0; v < g.n(); ++v) {
                if (g.weight(v) > weight_bound)
                  throw InconsistencyError("basis member exceeds the weight bound");
                if (g.degree(v) > g.weight(v) + d)
                  throw InconsistencyError("basis member exceeds the degree bound");
                if (d > 1 && g.degree(v) > 2 * d - 1)
                  throw InconsistencyError("basis member exceeds the refined degree bound");
              }
              if (seen_members.insert(cf.certificate).second)
                catalog.members.push_back(
                    BasisMember{cf.graph, cf.certificate, oracle_confirmed});
            }
          }
        }
      }
      // odometer over weight vectors bounded by weight_bound
      int pos = 0;
      while (pos < s.n() && w[pos] == weight_bound) w[pos++] = 1;
      if (pos == s.n()) break;
      ++w[pos];
    }
  }

  std::stable_sort(catalog.members.begin(), catalog.members.end(),
                   [](const BasisMember& a, const BasisMember& b) {
                     if (a.graph.n() != b.graph.n()) return a.graph.n() < b.graph.n();
                     if (a.graph.m() != b.graph.m()) return a.graph.m() < b.graph.m();
                     return a.certificate < b.certificate;
                   });
  return catalog;
}

bool catalog_contains(const BasisCatalog& catalog, const WeightedGraph& g) {
  const std::string cert = canonical_form(g).certificate;
  for (const auto& m : catalog.members)
    if (m.certificate == cert) return true;
  return false;
}

ReductionCheck verify_basis_property(const BasisCatalog& catalog, const WeightedGraph& g,
                                     const Caps& caps) {
  ReductionCheck out;
  out.reduced = (catalog.space.target == BasisTarget::cfg) ? cfg_reduce(g, caps)
                                                           : shrink_to_basis(g, caps);
  out.certificate = canonical_form(out.reduced).certificate;
  out.contained = catalog_contains(catalog, out.reduced);
  return out;
}

}  // namespace critgraph
