#pragma once

#include <optional>
#include <string>
#include <vector>

#include "critgraph/graph.hpp"

namespace critgraph {

struct BoundCheck {
  std::string name;
  bool applicable = false;
  bool holds = true;
  bool capped = false;  // size cap hit, no verdict
  std::string detail;
};

struct AnalysisReport {
  std::string name;
  std::string canonical_hash;
  int n = 0;
  int m = 0;
  bool connected_graph = false;
  int alpha = 0;
  int defect = 0;
  int beta = 0;
  int subdefect = 0;
  std::vector<int> strengths;  // parallel to edges()
  int min_strength = 0;
  int max_strength = 0;
  bool alpha_critical = false;  // unit-weight graphs only
  bool critical = false;
  bool facet_graph = false;
  bool cfg = false;
  bool one_cfg = false;
  bool fdg = false;
  bool fdg_certificate_only = false;
  std::vector<BoundCheck> checks;
  std::vector<std::string> capped_stages;  // metrics skipped by size caps
  std::vector<std::string> violations;     // failed checks and consistency breaks
};

// Full pipeline on one graph: metrics, the six predicates, the degree
// and weight bound checks on critical facet-graphs, the structural
// checks on facet-defining graphs, and predicate consistency. Caps are
// reported per check, never fatal.
AnalysisReport analyze_graph(const GraphDocument& doc, const Caps& caps = {}, int jobs = 1);

struct CorpusEntry {
  std::string file;  // basename
  bool parsed = false;
  std::string error;
  std::optional<AnalysisReport> report;
};

struct CorpusReport {
  std::vector<CorpusEntry> entries;  // sorted by file name
  int violation_count = 0;
  int unreadable_count = 0;
};

// Analyze every *.json document in a directory. Unreadable files are
// listed and the run continues; aggregation order is by file name no
// matter how many workers ran.
CorpusReport corpus_run(const std::string& directory, const Caps& caps = {}, int jobs = 1);

}  // namespace critgraph
