#ifndef ASSUR_REPORT_HPP
#define ASSUR_REPORT_HPP

#include "assur/json_io.hpp"

namespace assur {

struct AnalyzeOptions {
  uint64_t seed = 0;
  int trials = 3;
  double tol = 1e-9;
  bool with_drivers = true;
  bool with_strong = true;
  int counts_cap = 16;   // brute-force subgraph scan
  int route1_cap = 10;   // minimal-subgraph route
};

struct AnalyzeResult {
  nlohmann::json report;
  std::vector<Violation> violations;
  bool valid = false;
  // a disagreement between the provably equivalent routes is an
  // implementation bug, not a property of the input
  bool route_disagreement = false;
};

AnalyzeResult analyze(const PinnedGraph& g, const AnalyzeOptions& opt);

}  // namespace assur

#endif
