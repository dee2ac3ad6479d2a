#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace possat::cli {

struct SuiteOptions {
  int threads = 1;
  std::uint64_t seed = 1;
};

struct CriterionResult {
  int id = 0;
  std::string claim;  // result id the criterion exercises: L1, T2, T3, P4, P5, P6
  std::string title;
  bool passed = false;
  std::string detail;
};

/// Criteria 1-10 of the verification battery at the given thread count.
std::vector<CriterionResult> run_paper_checks(const SuiteOptions& options);

/// Criteria 1-10, then criterion 11: the whole battery again with a different
/// thread count, compared byte for byte with the first run.
std::vector<CriterionResult> run_paper_suite(const SuiteOptions& options);

/// One line per criterion: "[PASS] 4. T2 - <title>: <detail>".
std::string render(const std::vector<CriterionResult>& results);

}  // namespace possat::cli
