#pragma once

#include <string>
#include <vector>

namespace tschirn {

struct SuiteOptions {
  std::string scale = "smoke";  // "smoke" or "full"
  int jobs = 1;
  long timeout_ms = 0;    // per row; 0 disables the budget check
  std::string data_dir;   // golden corpus directory; empty skips goldens
  long bound = 3;         // coefficient bound for sampled instances
  unsigned long long seed = 1;
  int delta_filter = -1;  // -1 runs both families, 0 or 1 restricts
};

struct SuiteRow {
  std::string name;
  bool pass = false;
  long elapsed_ms = 0;
  std::string detail;  // empty on pass
};

struct SuiteResult {
  std::vector<SuiteRow> rows;
  bool all_pass = true;
  long elapsed_ms = 0;
};

// Runs the verification matrix (goldens + seeded random instances + plane
// projections) on a worker pool; rows are reported in input order
// regardless of scheduling.  Individual failures become failing rows, never
// exceptions.
SuiteResult run_suite(const SuiteOptions& opts);

std::string suite_to_text(const SuiteResult& r, bool pretty = false);

}  // namespace tschirn
