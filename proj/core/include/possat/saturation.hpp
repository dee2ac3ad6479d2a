#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "possat/embedding.hpp"
#include "possat/model.hpp"
#include "possat/poset.hpp"
#include "possat/random.hpp"

namespace possat {

struct SaturationReport {
  bool free = false;
  std::optional<EmbeddingWitness> witness;  // present iff !free
  std::vector<SubsetMask> unsaturated;      // missing sets that create no copy
  bool saturated = false;                   // free && unsaturated.empty()
};

struct SaturationOptions {
  /// Stop at the first missing set that creates no copy.
  bool fail_fast = false;
  /// Worker threads for the missing-set scan; results do not depend on it.
  int threads = 1;
};

bool is_free(const SetFamily& family, const PosetSpec& q);

/// Freeness, then every missing S is tested for a copy in family + {S} that
/// uses S. Restricting to copies through S is sound because the base family
/// is free. The missing-set scan is skipped when the family is not free.
SaturationReport saturation_report(const SetFamily& family, const PosetSpec& q,
                                   SaturationOptions options = {});

inline bool is_saturated(const SetFamily& family, const PosetSpec& q, int threads = 1) {
  return saturation_report(family, q, {.fail_fast = true, .threads = threads}).saturated;
}

/// Greedy completion: walks candidates in canonical order and keeps every set
/// that does not close a copy. The result is maximal free, hence saturated.
/// Throws UsageError if the seed already contains a copy.
SetFamily greedy_saturate(const SetFamily& seed, const PosetSpec& q);

/// Same, with an explicit candidate order. `order` must list every set
/// missing from `seed` exactly once; seed members in it are skipped.
SetFamily greedy_saturate(const SetFamily& seed, const PosetSpec& q,
                          std::span<const SubsetMask> order);

/// The sets missing from `seed` in a uniformly shuffled order.
std::vector<SubsetMask> shuffled_candidates(const SetFamily& seed, Rng& rng);

/// {} together with all singletons, all pairs and all prefixes [i].
SetFamily butterfly_construction(int n);

/// {} together with all singletons and all prefixes [i]; exactly 2n sets.
SetFamily n_construction(int n);

/// All singletons plus the chain {} < [1] < [2] < ... < [n]. Needs n > k >= 2.
SetFamily k2k_seed(int n, int k);

/// All singletons plus k-1 full chains. Chain i (1 <= i <= k-1) runs through
/// the prefixes of the sequence ([n] minus i in increasing order, then i), so
/// it starts at {}, passes [n] minus {i} and ends at [n]. Needs k >= 2 and
/// n >= 2k-1.
SetFamily kkk_seed(int n, int k);

}  // namespace possat
