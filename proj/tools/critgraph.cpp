// critgraph: exact stability, worth and facet computations on small
// weighted graphs, plus the transformation and enumeration pipelines.
// Exit codes: 0 all checks pass, 1 a mathematical invariant failed,
// 2 usage or input error.

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "critgraph/analyze.hpp"
#include "critgraph/basisenum.hpp"
#include "critgraph/graph.hpp"
#include "critgraph/polytopes.hpp"
#include "critgraph/stability.hpp"
#include "critgraph/tournament.hpp"
#include "critgraph/transforms.hpp"
#include "critgraph/worth.hpp"

using nlohmann::json;
using namespace critgraph;

namespace {

struct Options {
  std::string format = "text";
  int jobs = 1;
  bool oracle = false;
  Caps caps;
};

GraphDocument load_document(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  GraphDocument doc = parse_graph(text);
  if (doc.name.empty()) doc.name = path;
  return doc;
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw ParseError("cannot write " + out_path);
  out << text;
}

void emit(const Options& opt, const json& j, const std::string& text) {
  if (opt.format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

std::string edge_name(const WeightedGraph& g, int u, int v) {
  return g.id(u) + "-" + g.id(v);
}

std::pair<int, int> parse_edge_arg(const WeightedGraph& g, const std::string& spec) {
  const auto comma = spec.find(',');
  if (comma == std::string::npos) throw ParseError("edge must be given as idA,idB");
  const int u = g.vertex_index(spec.substr(0, comma));
  const int v = g.vertex_index(spec.substr(comma + 1));
  if (u < 0 || v < 0) throw ParseError("unknown vertex in edge " + spec);
  return {u, v};
}

json strengths_json(const WeightedGraph& g, const StrengthMap& s) {
  json edges = json::array();
  for (size_t i = 0; i < g.edges().size(); ++i) {
    auto [u, v] = g.edges()[i];
    edges.push_back({{"edge", edge_name(g, u, v)}, {"strength", s.by_edge[i]}});
  }
  return {{"edges", edges}, {"min", s.min_strength}, {"max", s.max_strength}};
}

json report_json(const AnalysisReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json jc = {{"name", c.name}, {"applicable", c.applicable}};
    if (c.applicable && !c.capped) jc["holds"] = c.holds;
    if (c.capped) jc["capped"] = true;
    if (!c.detail.empty()) jc["detail"] = c.detail;
    checks.push_back(jc);
  }
  return {{"name", r.name},
          {"hash", r.canonical_hash},
          {"n", r.n},
          {"m", r.m},
          {"connected", r.connected_graph},
          {"alpha", r.alpha},
          {"defect", r.defect},
          {"beta", r.beta},
          {"subdefect", r.subdefect},
          {"min_strength", r.min_strength},
          {"max_strength", r.max_strength},
          {"alpha_critical", r.alpha_critical},
          {"critical", r.critical},
          {"facet_graph", r.facet_graph},
          {"cfg", r.cfg},
          {"one_cfg", r.one_cfg},
          {"fdg", r.fdg},
          {"fdg_certificate_only", r.fdg_certificate_only},
          {"checks", checks},
          {"capped_stages", r.capped_stages},
          {"violations", r.violations}};
}

std::string report_text(const AnalysisReport& r) {
  std::ostringstream os;
  os << r.name << " (hash " << r.canonical_hash << ")\n";
  os << "  n = " << r.n << ", m = " << r.m << ", connected = " << (r.connected_graph ? "yes" : "no")
     << "\n";
  os << "  alpha = " << r.alpha << ", defect = " << r.defect << ", beta = " << r.beta
     << ", subdefect = " << r.subdefect << "\n";
  os << "  strengths in [" << r.min_strength << ", " << r.max_strength << "]\n";
  os << "  alpha-critical = " << (r.alpha_critical ? "yes" : "no")
     << ", critical = " << (r.critical ? "yes" : "no") << "\n";
  os << "  facet-graph = " << (r.facet_graph ? "yes" : "no") << ", cfg = "
     << (r.cfg ? "yes" : "no") << ", 1-cfg = " << (r.one_cfg ? "yes" : "no") << "\n";
  os << "  fdg = " << (r.fdg ? "yes" : "no")
     << (r.fdg_certificate_only ? " (certificate only)" : "") << "\n";
  for (const auto& c : r.checks) {
    if (!c.applicable) continue;
    os << "  check " << c.name << ": "
       << (c.capped ? "capped" : (c.holds ? "pass" : "FAIL"));
    if (!c.detail.empty()) os << " (" << c.detail << ")";
    os << "\n";
  }
  for (const auto& s : r.capped_stages) os << "  capped stage: " << s << "\n";
  if (!r.violations.empty()) {
    os << "  violations:";
    for (const auto& v : r.violations) os << " " << v;
    os << "\n";
  }
  return os.str();
}

std::string color_name(ArcColor c) {
  switch (c) {
    case ArcColor::red: return "red";
    case ArcColor::blue: return "blue";
    default: return "none";
  }
}

json dg_json(const DgConstruction& d) {
  const WeightedGraph& g = d.graph;
  json centers = json::array();
  for (int v : d.centers) centers.push_back(g.id(v));
  json arcs = json::array();
  for (int a = 0; a < d.dg.n; ++a)
    for (int b = 0; b < d.dg.n; ++b) {
      ArcColor c = d.dg.arc(a, b);
      if (c == ArcColor::none) continue;
      arcs.push_back({{"from", d.dg.labels[a]}, {"to", d.dg.labels[b]}, {"color", color_name(c)}});
    }
  return {{"n", d.dg.n},
          {"groups", (int)d.centers.size()},
          {"alpha", d.alpha},
          {"defect", d.defect},
          {"centers", centers},
          {"labels", d.dg.labels},
          {"arcs", arcs}};
}

std::string dg_dot(const DgConstruction& d) {
  std::ostringstream os;
  os << "digraph dg {\n";
  for (int v = 0; v < d.dg.n; ++v)
    os << "  n" << v << " [label=\"" << d.dg.labels[v] << "\"];\n";
  for (int a = 0; a < d.dg.n; ++a)
    for (int b = 0; b < d.dg.n; ++b) {
      ArcColor c = d.dg.arc(a, b);
      if (c == ArcColor::none) continue;
      os << "  n" << a << " -> n" << b << " [color=" << color_name(c) << "];\n";
    }
  os << "}\n";
  return os.str();
}

// Build D_G, normalizing first when the input is not yet in the
// degree-3 form the construction needs.
DgConstruction build_dg_auto(const WeightedGraph& g, bool normalize, const Caps& caps,
                             const StableSelector* pick) {
  WeightedGraph base = g;
  bool needs = g.max_degree() > 3;
  if (!needs)
    for (auto [u, v] : g.edges())
      if (g.degree(u) == 3 && g.degree(v) == 3) { needs = true; break; }
  if (needs) {
    if (!normalize)
      throw PreconditionError("graph is not in degree-3 form; rerun without --no-normalize");
    base = normalize_for_dg(g, caps);
  }
  return pick ? build_dg(base, *pick, caps) : build_dg(base, caps);
}

int cmd_check(const Options& opt, const std::string& which, const GraphDocument& doc) {
  const WeightedGraph& g = doc.graph;
  bool holds = false;
  json extra;
  if (which == "alpha-critical") {
    holds = is_alpha_critical(g, false, opt.caps);
  } else if (which == "critical") {
    holds = is_critical_weighted(g, opt.caps);
  } else if (which == "facet-graph") {
    FacetCertificate c = is_facet_graph(g, opt.caps);
    holds = c.is_facet;
    extra = {{"rank", c.matrix_rank},
             {"required_rank", c.required_rank},
             {"tight_sets", c.tight_count}};
  } else if (which == "cfg") {
    holds = is_cfg(g, opt.caps);
  } else if (which == "one-cfg") {
    holds = is_one_cfg(g, opt.caps);
  } else if (which == "fdg") {
    FdgDecision dec = is_fdg(g, opt.caps, opt.oracle);
    holds = dec.is_fdg;
    extra = {{"certificate_only", dec.certificate_only},
             {"system_rank", dec.system.matrix_rank},
             {"required_rank", dec.system.required_rank},
             {"tight_sets", dec.system.tight_count}};
    if (dec.oracle) {
      extra["oracle"] = {{"max_lhs", dec.oracle->max_lhs},
                         {"rhs", dec.oracle->rhs},
                         {"rank", dec.oracle->matrix_rank},
                         {"required_rank", dec.oracle->required_rank},
                         {"tight_orders", dec.oracle->tight_count}};
    }
  } else {
    throw ParseError("unknown predicate " + which);
  }
  json j = {{"check", which}, {"graph", doc.name}, {"holds", holds}};
  if (!extra.is_null()) j["certificate"] = extra;
  std::ostringstream os;
  os << which << "(" << doc.name << ") = " << (holds ? "true" : "false") << "\n";
  emit(opt, j, os.str());
  return holds ? 0 : 1;
}

json inequality_json(const GraphicalInequality& q) {
  json vcoef = json::object();
  for (int v = 0; v < q.base_n; ++v) vcoef[q.node_ids[v]] = q.vertex_coeff[v];
  json ecoef = json::object();
  for (size_t e = 0; e < q.base_edges.size(); ++e) {
    auto [u, v] = q.base_edges[e];
    ecoef[q.node_ids[u] + "<" + q.node_ids[v]] = q.edge_coeff[e];
  }
  json j = {{"mode", q.mode == IneqMode::unit_coefficients ? "unit" : "strength"},
            {"nodes", q.node_ids},
            {"vertex_coefficients", vcoef},
            {"edge_coefficients", ecoef}};
  if (q.rhs) j["rhs"] = *q.rhs;
  else j["rhs"] = nullptr;
  return j;
}

std::string inequality_text(const GraphicalInequality& q) {
  std::ostringstream os;
  bool first = true;
  for (int v = 0; v < q.base_n; ++v) {
    if (!first) os << " + ";
    first = false;
    if (q.vertex_coeff[v] != 1) os << q.vertex_coeff[v] << " ";
    os << "x(" << q.node_ids[v] << "<" << q.node_ids[v + q.base_n] << ")";
  }
  for (size_t e = 0; e < q.base_edges.size(); ++e) {
    auto [u, v] = q.base_edges[e];
    os << " - ";
    if (q.edge_coeff[e] != 1) os << q.edge_coeff[e] << " ";
    os << "[x(" << q.node_ids[u] << "<" << q.node_ids[v + q.base_n] << ") + x("
       << q.node_ids[v] << "<" << q.node_ids[u + q.base_n] << ")]";
  }
  os << " <= ";
  if (q.rhs) os << *q.rhs;
  else os << "?";
  os << "\n";
  return os.str();
}

json member_json(const BasisMember& m) {
  json weights = json::array();
  for (int v = 0; v < m.graph.n(); ++v) weights.push_back(m.graph.weight(v));
  json edges = json::array();
  for (auto [u, v] : m.graph.edges()) edges.push_back(edge_name(m.graph, u, v));
  std::string hash;
  {
    // short stable tag so members can be compared across runs
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : m.certificate) { h ^= c; h *= 1099511628211ULL; }
    std::ostringstream os;
    os << std::hex << h;
    hash = os.str();
  }
  return {{"n", m.graph.n()},
          {"m", m.graph.m()},
          {"weights", weights},
          {"edges", edges},
          {"hash", hash},
          {"oracle_confirmed", m.oracle_confirmed}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact stability, worth and facet toolkit for small weighted graphs"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->envname("CRITGRAPH_FORMAT");
  app.add_option("--jobs", opt.jobs, "worker threads for per-edge and per-file parallelism")
      ->envname("CRITGRAPH_JOBS");
  app.add_option("--max-n", opt.caps.alpha_n, "stability computation vertex cap")
      ->envname("CRITGRAPH_MAX_N");
  app.add_option("--enum-n", opt.caps.enum_n, "structure enumeration vertex cap")
      ->envname("CRITGRAPH_ENUM_N");
  app.add_option("--oracle-n", opt.caps.oracle_nodes, "full order-enumeration node cap")
      ->envname("CRITGRAPH_ORACLE_N");
  app.add_flag("--oracle", opt.oracle, "force the order-enumeration oracle in fdg checks")
      ->envname("CRITGRAPH_ORACLE");

  std::string path, out_path;
  std::string which, mode = "unit", target = "cfg";
  std::vector<std::string> edge_args;
  std::string pair_arg;
  int len = 3, defect = 1, max_n = 8, samples = 0;
  unsigned long long seed = 12345;
  bool no_normalize = false, dot = false;

  auto* c_alpha = app.add_subcommand("alpha", "maximum stable set weight and defect");
  c_alpha->add_option("file", path)->required();
  auto* c_beta = app.add_subcommand("beta", "maximum worth and subdefect");
  c_beta->add_option("file", path)->required();
  auto* c_sub = app.add_subcommand("subdefect", "total weight minus twice the maximum worth");
  c_sub->add_option("file", path)->required();
  auto* c_str = app.add_subcommand("strength", "per-edge strengths");
  c_str->add_option("file", path)->required();
  auto* c_check = app.add_subcommand("check", "predicate verdict with certificate data");
  c_check->add_option("predicate", which, "alpha-critical|critical|facet-graph|cfg|one-cfg|fdg")
      ->required();
  c_check->add_option("file", path)->required();
  auto* c_gamma = app.add_subcommand("gamma", "exact maximum of the strength-mode inequality");
  c_gamma->add_option("file", path)->required();
  std::string sets_arg;
  auto* c_seq = app.add_subcommand("seq-bound",
                                   "defect lower bound from a sequence of maximum worth sets");
  c_seq->add_option("file", path)->required();
  c_seq->add_option("--sets", sets_arg, "JSON array of vertex-id arrays")->required();
  auto* c_ineq = app.add_subcommand("inequality", "emit the graphical inequality");
  c_ineq->add_option("file", path)->required();
  c_ineq->add_option("--mode", mode)->check(CLI::IsMember({"unit", "strength"}));
  auto* c_tr = app.add_subcommand("transform", "rewrite a graph and emit the result");
  c_tr->add_option("operation", which, "subdivide|shrink|to-one-cfg|shrink-to-basis")->required();
  c_tr->add_option("file", path)->required();
  c_tr->add_option("--edge", edge_args, "edge idA,idB (repeatable, subdivide)");
  c_tr->add_option("--pair", pair_arg, "adjacent degree-2 pair idX,idY (shrink)");
  c_tr->add_option("--len", len, "odd path length for subdivide");
  c_tr->add_option("--mode", mode, "unit|elementary coefficients for subdivide")
      ->check(CLI::IsMember({"unit", "elementary"}));
  c_tr->add_option("--out", out_path, "output file, - for stdout");
  auto* c_enum = app.add_subcommand("enumerate", "catalog of unshrinkable graphs at a defect");
  c_enum->add_option("--target", target)->check(CLI::IsMember({"cfg", "fdg"}));
  c_enum->add_option("--defect", defect)->required();
  c_enum->add_option("--max-vertices", max_n, "enumeration vertex cap");
  auto* c_dg = app.add_subcommand("dg", "colored digraph on the degree-3 centers");
  c_dg->require_subcommand(1);
  auto* c_dgb = c_dg->add_subcommand("build", "construct and emit the digraph");
  c_dgb->add_option("file", path)->required();
  c_dgb->add_flag("--no-normalize", no_normalize, "fail instead of normalizing first");
  c_dgb->add_flag("--dot", dot, "emit DOT instead of JSON");
  auto* c_dgc = c_dg->add_subcommand("check", "tournament order bound against the defect");
  c_dgc->add_option("file", path)->required();
  c_dgc->add_option("--samples", samples, "extra random stable-set selections");
  c_dgc->add_option("--seed", seed, "random selection seed");
  auto* c_an = app.add_subcommand("analyze", "full per-graph report");
  c_an->add_option("file", path)->required();
  auto* c_corpus = app.add_subcommand("corpus", "analyze every .json document in a directory");
  c_corpus->add_option("directory", path)->required();
  auto* c_dot = app.add_subcommand("export-dot", "graph in DOT format");
  c_dot->add_option("file", path)->required();
  c_dot->add_option("--out", out_path, "output file, - for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*c_alpha) {
      GraphDocument doc = load_document(path);
      const int a = alpha_value(doc.graph, opt.caps);
      const int d = doc.graph.total_weight() - 2 * a;
      std::ostringstream os;
      os << "alpha = " << a << "\ndefect = " << d << "\n";
      emit(opt, {{"alpha", a}, {"defect", d}}, os.str());
    } else if (*c_beta) {
      GraphDocument doc = load_document(path);
      const int b = beta_value(doc.graph, opt.caps);
      const int l = doc.graph.total_weight() - 2 * b;
      std::ostringstream os;
      os << "beta = " << b << "\nsubdefect = " << l << "\n";
      emit(opt, {{"beta", b}, {"subdefect", l}}, os.str());
    } else if (*c_sub) {
      GraphDocument doc = load_document(path);
      const int l = subdefect(doc.graph, opt.caps);
      emit(opt, {{"subdefect", l}}, "subdefect = " + std::to_string(l) + "\n");
    } else if (*c_str) {
      GraphDocument doc = load_document(path);
      StrengthMap s = strength(doc.graph, opt.caps, opt.jobs);
      std::ostringstream os;
      for (size_t i = 0; i < doc.graph.edges().size(); ++i) {
        auto [u, v] = doc.graph.edges()[i];
        os << edge_name(doc.graph, u, v) << ": " << s.by_edge[i] << "\n";
      }
      emit(opt, strengths_json(doc.graph, s), os.str());
    } else if (*c_check) {
      return cmd_check(opt, which, load_document(path));
    } else if (*c_gamma) {
      GraphDocument doc = load_document(path);
      const long long gval = compute_gamma(doc.graph, opt.caps);
      const int b = beta_value(doc.graph, opt.caps);
      std::ostringstream os;
      os << "gamma = " << gval << "\nbeta = " << b << "\n";
      emit(opt, {{"gamma", gval}, {"beta", b}}, os.str());
    } else if (*c_seq) {
      GraphDocument doc = load_document(path);
      json parsed = json::parse(sets_arg, nullptr, false);
      if (!parsed.is_array()) throw ParseError("--sets must be a JSON array of id arrays");
      std::vector<uint64_t> masks;
      for (const auto& arr : parsed) {
        if (!arr.is_array()) throw ParseError("--sets must be a JSON array of id arrays");
        uint64_t mask = 0;
        for (const auto& idv : arr) {
          const int v = doc.graph.vertex_index(idv.get<std::string>());
          if (v < 0) throw ParseError("unknown vertex id in --sets");
          mask |= 1ULL << v;
        }
        masks.push_back(mask);
      }
      WorthSequenceBound b = sequence_bound(doc.graph, masks, opt.caps);
      std::ostringstream os;
      os << "bound = " << b.bound << "\ndefect = " << b.defect << "\n";
      emit(opt, {{"bound", b.bound}, {"defect", b.defect}}, os.str());
    } else if (*c_ineq) {
      GraphDocument doc = load_document(path);
      GraphicalInequality q = graphical_inequality(
          doc.graph,
          mode == "unit" ? IneqMode::unit_coefficients : IneqMode::strength_coefficients,
          opt.caps);
      emit(opt, inequality_json(q), inequality_text(q));
    } else if (*c_tr) {
      GraphDocument doc = load_document(path);
      WeightedGraph out;
      if (which == "subdivide") {
        if (edge_args.empty()) throw ParseError("subdivide needs at least one --edge");
        std::vector<std::pair<int, int>> list;
        for (const auto& s : edge_args) list.push_back(parse_edge_arg(doc.graph, s));
        if (mode == "elementary") {
          if (len != 3) throw ParseError("elementary subdivision uses length 3");
          out = elementary_odd_subdivision(doc.graph, list, opt.caps);
        } else {
          std::map<std::pair<int, int>, int> plan;
          for (auto e : list) plan[e] = len;
          out = unit_odd_subdivision(doc.graph, plan);
        }
      } else if (which == "shrink") {
        if (pair_arg.empty()) throw ParseError("shrink needs --pair");
        auto [x, y] = parse_edge_arg(doc.graph, pair_arg);
        out = shrink_once(doc.graph, x, y);
      } else if (which == "to-one-cfg") {
        out = to_one_cfg(doc.graph, opt.caps);
      } else if (which == "shrink-to-basis") {
        out = shrink_to_basis(doc.graph, opt.caps);
      } else {
        throw ParseError("unknown transform " + which);
      }
      GraphDocument res;
      res.graph = out;
      res.name = doc.name + ":" + which;
      write_output(serialize_graph(res), out_path);
    } else if (*c_enum) {
      SearchSpace space;
      space.target = target == "cfg" ? BasisTarget::cfg : BasisTarget::fdg;
      space.defect = defect;
      space.max_vertices = max_n;
      BasisCatalog cat = enumerate_basis(space, opt.caps);
      json members = json::array();
      for (const auto& m : cat.members) members.push_back(member_json(m));
      json j = {{"target", target},
                {"defect", space.defect},
                {"max_vertices", space.max_vertices},
                {"count", (int)cat.members.size()},
                {"members", members},
                {"structures_examined", cat.structures_examined},
                {"weightings_examined", cat.weightings_examined}};
      std::ostringstream os;
      os << "catalog: " << cat.members.size() << " graph(s) at defect " << space.defect
         << ", cap " << space.max_vertices << " vertices\n";
      for (const auto& m : cat.members) {
        os << "  n=" << m.graph.n() << " m=" << m.graph.m() << " weights=[";
        for (int v = 0; v < m.graph.n(); ++v)
          os << (v ? "," : "") << m.graph.weight(v);
        os << "] edges=[";
        for (size_t i = 0; i < m.graph.edges().size(); ++i) {
          auto [u, v] = m.graph.edges()[i];
          os << (i ? "," : "") << edge_name(m.graph, u, v);
        }
        os << "]" << (m.oracle_confirmed ? "" : " (certificate only)") << "\n";
      }
      emit(opt, j, os.str());
    } else if (*c_dgb) {
      GraphDocument doc = load_document(path);
      DgConstruction d = build_dg_auto(doc.graph, !no_normalize, opt.caps, nullptr);
      if (dot)
        std::cout << dg_dot(d);
      else
        emit(opt, dg_json(d), dg_dot(d));
    } else if (*c_dgc) {
      GraphDocument doc = load_document(path);
      DgConstruction d = build_dg_auto(doc.graph, true, opt.caps, nullptr);
      TournamentResult best = max_mono_admissible_tournament(d.dg);
      int worst = best.size;
      std::mt19937_64 rng(seed);
      for (int s = 0; s < samples; ++s) {
        StableSelector pick = [&rng](const WeightedGraph& h, const Caps& c) {
          return random_max_stable(h, rng, c);
        };
        DgConstruction ds = build_dg_auto(doc.graph, true, opt.caps, &pick);
        TournamentResult r = max_mono_admissible_tournament(ds.dg);
        worst = std::max(worst, r.size);
      }
      const bool holds = worst <= d.defect;
      json j = {{"defect", d.defect},
                {"max_tournament_order", worst},
                {"samples", samples},
                {"holds", holds}};
      std::ostringstream os;
      os << "defect = " << d.defect << "\nmax admissible tournament order = " << worst
         << "\nbound " << (holds ? "holds" : "FAILS") << "\n";
      emit(opt, j, os.str());
      if (!holds) return 1;
    } else if (*c_an) {
      GraphDocument doc = load_document(path);
      AnalysisReport r = analyze_graph(doc, opt.caps, opt.jobs);
      emit(opt, report_json(r), report_text(r));
      if (!r.violations.empty()) return 1;
    } else if (*c_corpus) {
      CorpusReport r = corpus_run(path, opt.caps, opt.jobs);
      json entries = json::array();
      std::ostringstream os;
      for (const auto& e : r.entries) {
        if (!e.parsed) {
          entries.push_back({{"file", e.file}, {"error", e.error}});
          os << e.file << ": ERROR " << e.error << "\n";
        } else {
          entries.push_back({{"file", e.file},
                             {"report", report_json(*e.report)}});
          os << e.file << ": " << (e.report->violations.empty() ? "ok" : "VIOLATIONS") << "\n";
        }
      }
      os << r.entries.size() << " file(s), " << r.unreadable_count << " unreadable, "
         << r.violation_count << " violation(s)\n";
      emit(opt,
           {{"files", (int)r.entries.size()},
            {"unreadable", r.unreadable_count},
            {"violations", r.violation_count},
            {"entries", entries}},
           os.str());
      if (r.violation_count > 0) return 1;
      if (r.unreadable_count > 0) return 2;
    } else if (*c_dot) {
      GraphDocument doc = load_document(path);
      write_output(to_dot(doc.graph), out_path);
    }
  } catch (const InconsistencyError& e) {
    std::cerr << "inconsistency: " << e.what() << "\n";
    return 1;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 2;
  } catch (const ArithmeticOverflow& e) {
    std::cerr << "arithmetic overflow: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
