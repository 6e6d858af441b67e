#include "critgraph/analyze.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <future>
#include <sstream>

#include "critgraph/polytopes.hpp"
#include "critgraph/stability.hpp"
#include "critgraph/worth.hpp"

namespace critgraph {

namespace {

std::string fnv_hex(const std::string& bytes) {
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex;
  for (int i = 15; i >= 0; --i) os << ((h >> (4 * i)) & 0xf);
  return os.str();
}

template <typename F>
bool run_stage(AnalysisReport& rep, const std::string& stage, F&& f) {
  try {
    f();
    return true;
  } catch (const CapExceeded&) {
    rep.capped_stages.push_back(stage);
    return false;
  }
}

void add_check(AnalysisReport& rep, BoundCheck c) {
  if (c.applicable && !c.capped && !c.holds) rep.violations.push_back(c.name);
  rep.checks.push_back(std::move(c));
}

template <typename F>
BoundCheck make_check(const std::string& name, bool applicable, F&& eval) {
  BoundCheck c;
  c.name = name;
  c.applicable = applicable;
  if (!applicable) return c;
  try {
    c.holds = eval(c.detail);
  } catch (const CapExceeded& e) {
    c.capped = true;
    c.detail = e.what();
  }
  return c;
}

}  // namespace

AnalysisReport analyze_graph(const GraphDocument& doc, const Caps& caps, int jobs) {
  const WeightedGraph& g = doc.graph;
  AnalysisReport rep;
  rep.name = doc.name;
  rep.canonical_hash = fnv_hex(canonical_form(g).certificate);
  rep.n = g.n();
  rep.m = g.m();
  rep.connected_graph = connected(g);

  bool have_alpha = run_stage(rep, "alpha", [&] {
    rep.alpha = alpha_value(g, caps);
    rep.defect = g.total_weight() - 2 * rep.alpha;
  });
  bool have_beta = run_stage(rep, "beta", [&] {
    rep.beta = beta_value(g, caps);
    rep.subdefect = g.total_weight() - 2 * rep.beta;
  });
  bool have_strength = run_stage(rep, "strength", [&] {
    StrengthMap s = strength(g, caps, jobs);
    rep.strengths = s.by_edge;
    rep.min_strength = s.min_strength;
    rep.max_strength = s.max_strength;
  });

  run_stage(rep, "alpha-critical", [&] {
    rep.alpha_critical = g.unit_weights() && is_alpha_critical(g, false, caps);
  });
  if (have_strength) rep.critical = g.m() > 0 ? rep.min_strength >= 1 : true;

  const bool decidable = rep.n >= 3 && rep.connected_graph;
  run_stage(rep, "facet-graph", [&] {
    rep.facet_graph = decidable && is_facet_graph(g, caps).is_facet;
  });
  rep.cfg = rep.facet_graph && rep.critical;
  rep.one_cfg = rep.cfg && rep.min_strength == 1 && rep.max_strength == 1;
  run_stage(rep, "fdg", [&] {
    if (decidable) {
      FdgDecision dec = is_fdg(g, caps);
      rep.fdg = dec.is_fdg;
      rep.fdg_certificate_only = dec.certificate_only;
    }
  });

  // deg(v) <= a(v) + defect <= 2 defect on critical facet-graphs, with
  // the sharper 2 defect - 1 cap once the defect exceeds 1
  add_check(rep, make_check("cfg-degree-weight-bound", rep.cfg && have_alpha,
                            [&](std::string& detail) {
                              const int d = rep.defect;
                              for (int v = 0; v < g.n(); ++v) {
                                const bool ok = g.degree(v) <= g.weight(v) + d &&
                                                g.weight(v) <= d &&
                                                (d <= 1 || g.degree(v) <= 2 * d - 1);
                                if (!ok) {
                                  detail = "vertex " + g.id(v);
                                  return false;
                                }
                              }
                              return true;
                            }));
  add_check(rep, make_check("fdg-degree-weight-bound", rep.fdg && have_beta,
                            [&](std::string& detail) {
                              const int d = rep.subdefect;
                              for (int v = 0; v < g.n(); ++v) {
                                const bool ok = g.degree(v) <= g.weight(v) + d &&
                                                g.weight(v) <= d &&
                                                (d <= 1 || g.degree(v) <= 2 * d - 1);
                                if (!ok) {
                                  detail = "vertex " + g.id(v);
                                  return false;
                                }
                              }
                              return true;
                            }));
  // every subset of an edge's ends is hit exactly by some maximum
  // worth set
  add_check(rep, make_check("fdg-edge-subset-realization", rep.fdg && have_beta,
                            [&](std::string& detail) {
                              for (auto [u, v] : g.edges()) {
                                const uint64_t both = (1ULL << u) | (1ULL << v);
                                for (uint64_t in = 0;; in = (in - both) & both) {
                                  if (beta_value_forced(g, in, both & ~in, caps) != rep.beta) {
                                    detail = "edge " + g.id(u) + "-" + g.id(v);
                                    return false;
                                  }
                                  if (in == both) break;
                                }
                              }
                              return true;
                            }));
  add_check(rep, make_check("fdg-min-degree", rep.fdg, [&](std::string& detail) {
    if (g.min_degree() >= 2) return true;
    detail = "minimum degree " + std::to_string(g.min_degree());
    return false;
  }));
  add_check(rep, make_check("fdg-no-k2-cutset", rep.fdg, [&](std::string& detail) {
    auto cuts = k2_cutsets(g);
    if (cuts.empty()) return true;
    detail = "cutset " + g.id(cuts.front().first) + "-" + g.id(cuts.front().second);
    return false;
  }));
  add_check(rep, make_check("one-cfg-alpha-equals-beta", rep.one_cfg && have_alpha && have_beta,
                            [&](std::string& detail) {
                              if (rep.alpha == rep.beta && rep.defect == rep.subdefect)
                                return true;
                              detail = "alpha " + std::to_string(rep.alpha) + ", beta " +
                                       std::to_string(rep.beta);
                              return false;
                            }));
  add_check(rep, make_check("predicate-consistency", true, [&](std::string& detail) {
    if (rep.one_cfg && !rep.cfg) { detail = "1-cfg without cfg"; return false; }
    if (rep.cfg && !rep.facet_graph) { detail = "cfg without facet-graph"; return false; }
    if (rep.cfg && !rep.critical) { detail = "cfg without criticality"; return false; }
    if (rep.fdg && g.min_degree() < 2) { detail = "fdg with a degree-1 vertex"; return false; }
    return true;
  }));

  (void)have_alpha;
  return rep;
}

namespace {

CorpusEntry analyze_file(const std::filesystem::path& path, const Caps& caps) {
  CorpusEntry entry;
  entry.file = path.filename().string();
  std::ifstream in(path);
  if (!in) {
    entry.error = "unreadable";
    return entry;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    GraphDocument doc = parse_graph(buf.str());
    if (doc.name.empty()) doc.name = path.stem().string();
    entry.report = analyze_graph(doc, caps, 1);
    entry.parsed = true;
  } catch (const ParseError& e) {
    entry.error = e.what();
  }
  return entry;
}

}  // namespace

CorpusReport corpus_run(const std::string& directory, const Caps& caps, int jobs) {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  std::error_code ec;
  for (const auto& de : fs::directory_iterator(directory, ec))
    if (de.is_regular_file() && de.path().extension() == ".json") files.push_back(de.path());
  if (ec) throw ParseError("cannot read directory " + directory);
  std::sort(files.begin(), files.end());

  CorpusReport rep;
  rep.entries.resize(files.size());
  if (jobs <= 1 || files.size() <= 1) {
    for (size_t i = 0; i < files.size(); ++i) rep.entries[i] = analyze_file(files[i], caps);
  } else {
    std::atomic<size_t> next{0};
    auto worker = [&] {
      for (;;) {
        const size_t i = next.fetch_add(1);
        if (i >= files.size()) return;
        rep.entries[i] = analyze_file(files[i], caps);
      }
    };
    std::vector<std::future<void>> pool;
    const int k = std::min<int>(jobs, (int)files.size());
    for (int t = 0; t < k; ++t) pool.push_back(std::async(std::launch::async, worker));
    for (auto& f : pool) f.get();
  }
  for (const auto& e : rep.entries) {
    if (!e.parsed) ++rep.unreadable_count;
    else rep.violation_count += (int)e.report->violations.size();
  }
  return rep;
}

}  // namespace critgraph
