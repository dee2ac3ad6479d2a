#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "possat/model.hpp"

namespace possat {

/// (A, B, C) with C strictly inside both A and B, and A, B incomparable.
/// Stored with A before B by mask value.
struct Chevron {
  SubsetMask a;
  SubsetMask b;
  SubsetMask c;

  bool operator==(const Chevron&) const = default;
};

bool is_chevron(const Chevron& ch);

/// Chevrons attached to missing singletons or missing pairs, with the
/// image C + item that the injection into the family uses.
struct ChevronAssignment {
  std::vector<SubsetMask> domain;
  std::vector<Chevron> chevrons;
  std::vector<SubsetMask> images;
};

struct Counterexample {
  std::string kind;
  std::string detail;
  std::vector<SubsetMask> sets;
};

struct TheoremReport {
  std::string theorem;  // "L1", "T2", "T3", "P4"
  int n = 0;
  std::optional<int> k;  // singletons in the family, where relevant
  bool hypotheses_hold = false;
  long long bound = 0;
  std::size_t size = 0;
  bool passed = false;
  std::optional<Counterexample> counterexample;
  std::vector<std::string> notes;
};

/// Pair closure over present singletons: {i}, {j} in F implies {i, j} in F.
TheoremReport lemma1_check(const SetFamily& family, int threads = 1);

/// Among all butterflies of family + {i} that use {i} as a minimal element,
/// the chevron (A, B, C) formed by the tops and the other bottom with |C|
/// maximal. Ties: smallest C, then A, then B by mask value.
/// Throws UsageError if {i} is a member or i is out of range, and
/// ContractViolation if no such butterfly exists.
Chevron assign_chevron_to_singleton(const SetFamily& family, int i);

/// Same search for a missing pair with exactly one of its singletons present.
/// Also asserts C + pair is a member (ContractViolation otherwise).
Chevron assign_chevron_to_pair(const SetFamily& family, SubsetMask pair);

/// Chevrons for every missing singleton. Assumes the family is B-saturated.
ChevronAssignment singleton_chevron_map(const SetFamily& family);
/// Chevrons for every missing pair with exactly one singleton present.
ChevronAssignment pair_chevron_map(const SetFamily& family);

/// Tab-separated rows: item, A, B, C, image.
std::string chevron_map_tsv(const ChevronAssignment& assignment);

/// Saturation, empty set membership, the singleton injection into F and
/// |F| >= n + 1.
TheoremReport verify_theorem2(const SetFamily& family, int threads = 1);

/// Pair injection over pairs touching a present singleton and
/// |F| >= C(k,2) + k(n-k), where k counts present singletons (k >= 1).
TheoremReport verify_theorem3(const SetFamily& family, int threads = 1);

/// For each i in [n], the first ordered member pair (F, G) in canonical order
/// with F \ G = {i}; nullopt where none exists.
std::vector<std::optional<std::pair<SubsetMask, SubsetMask>>> try_difference_pair_cover(
    const SetFamily& family);

/// Total version keyed by element (1-indexed). Throws ContractViolation
/// naming the uncovered elements.
std::map<int, std::pair<SubsetMask, SubsetMask>> difference_pair_cover(const SetFamily& family);

struct Prop4Options {
  /// Also check the local form: for every member F and i in F there are
  /// members A within F and B with A \ B = {i}.
  bool local_cover = false;
  int threads = 1;
};

/// N-saturation, a total difference-pair cover and |F|^2 >= n.
TheoremReport verify_prop4(const SetFamily& family, Prop4Options options = {});

}  // namespace possat
