#include <algorithm>
#include <iostream>

#include "cli/cli.hpp"
#include "cli/suite.hpp"

int main() {
  const possat::cli::SuiteOptions options{.threads = possat::cli::default_threads(), .seed = 1};
  const auto results = possat::cli::run_paper_suite(options);
  std::cout << possat::cli::render(results);
  const auto failed = std::count_if(results.begin(), results.end(), [](const auto& r) { return !r.passed; });
  std::cout << (results.size() - static_cast<std::size_t>(failed)) << "/" << results.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
