#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "possat/poset.hpp"

namespace possat::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kUsage = 2,
  kContract = 3,
};

/// Resolves butterfly | n | k2k:K | kkk:K | chain:M | antichain:M, or else
/// treats the selector as a path to a poset JSON file.
PosetSpec resolve_poset(const std::string& selector);

/// Worker count from POSSAT_THREADS, or 1 when unset or invalid.
int default_threads();

/// Runs the tool on `args` (program name excluded). Reports go to `out`,
/// human-readable summaries and errors to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace possat::cli
