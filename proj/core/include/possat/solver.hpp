#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "possat/model.hpp"
#include "possat/poset.hpp"

namespace possat {

struct SolveResult {
  int n = 0;
  std::string poset;
  std::size_t value = 0;
  bool exact = false;
  SetFamily certificate{GroundSet(1)};
  std::optional<std::size_t> enumerated_count;
  std::chrono::milliseconds elapsed{0};
};

/// Largest n for which every subfamily of 2^[n] is scanned.
inline constexpr int kExhaustiveLimit = 4;

/// All saturated families over [n], sorted by size then member list.
///
/// n <= 4 scans all 2^(2^n) subfamilies and tests each one against the
/// definition. n = 5 requires `cap` and walks maximal free families by
/// include/exclude backtracking, stopping after `cap` families. Anything else
/// is a UsageError.
std::vector<SetFamily> enumerate_saturated_families(int n, const PosetSpec& q,
                                                    std::optional<std::size_t> cap = std::nullopt,
                                                    int threads = 1);

enum class SolveMethod {
  Auto,            // CopyHypergraph for n <= 4, BranchAndBound above
  CopyHypergraph,  // n <= 4 only
  BranchAndBound,
};

struct SolveOptions {
  std::chrono::milliseconds budget{std::chrono::minutes(1)};
  int threads = 1;
  SolveMethod method = SolveMethod::Auto;
};

/// sat*(n, q) with a certificate.
///
/// n <= 4: builds the hypergraph of all induced copies in 2^[n] and finds the
/// smallest maximal copy-free subfamily by scanning every subfamily; always
/// exact. n >= 5: branch and bound over maximal free families, seeded with a
/// canonical greedy family; exact only if the search finishes in budget.
SolveResult exact_sat_star(int n, const PosetSpec& q, SolveOptions options = {});

/// Greedy completions under shuffled candidate orders. Trial t starts from
/// seeds[t] when t < seeds.size() (the first such trial uses the canonical
/// order) and from the empty family otherwise. Returns the smallest result;
/// ties go to the earliest trial. Never exact.
SolveResult upper_bound_via_random_greedy(int n, const PosetSpec& q, std::size_t trials,
                                          std::uint64_t rng_seed,
                                          std::span<const SetFamily> seeds = {});

}  // namespace possat
