#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "possat/errors.hpp"
#include "possat/saturation.hpp"
#include "possat/solver.hpp"

using namespace possat;

namespace {

long long binomial(int n, int k) {
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

SetFamily family_of(int n, std::initializer_list<std::initializer_list<int>> sets) {
  const GroundSet g(n);
  std::vector<SubsetMask> members;
  for (const auto& s : sets) members.push_back(SubsetMask::of(g, s));
  return SetFamily(g, members);
}

bool contains_all(const SetFamily& big, const SetFamily& small) {
  return std::all_of(small.bits().begin(), small.bits().end(),
                     [&](std::uint32_t b) { return big.contains_bits(b); });
}

int largest_added(const SetFamily& result, const SetFamily& seed) {
  int largest = -1;
  for (const auto b : result.bits())
    if (!seed.contains_bits(b)) largest = std::max(largest, std::popcount(b));
  return largest;
}

}  // namespace

TEST_CASE("freeness examples") {
  CHECK(is_free(butterfly_construction(4), butterfly_poset()));
  CHECK(is_free(family_of(2, {{}, {1}, {1, 2}}), n_poset()));
  CHECK_FALSE(is_free(family_of(4, {{1}, {2}, {1, 2, 3}, {1, 2, 4}}), butterfly_poset()));
}

TEST_CASE("saturation report examples") {
  CHECK(saturation_report(n_construction(5), n_poset()).saturated);
  CHECK(saturation_report(butterfly_construction(4), butterfly_poset()).saturated);
  const GroundSet g(4);
  const auto r = saturation_report(SetFamily(g, {SubsetMask::empty(g)}), butterfly_poset());
  CHECK(r.free);
  CHECK_FALSE(r.saturated);
  CHECK(r.unsaturated.size() == 15);
  CHECK(std::count(r.unsaturated.begin(), r.unsaturated.end(), SubsetMask::of(g, {1})) == 1);
  const auto bad = saturation_report(family_of(4, {{1}, {2}, {1, 2, 3}, {1, 2, 4}}), butterfly_poset());
  CHECK_FALSE(bad.free);
  CHECK(bad.witness.has_value());
  CHECK(bad.unsaturated.empty());
  CHECK_FALSE(bad.saturated);
}

TEST_CASE("fail-fast and threads do not change the verdict") {
  const GroundSet g(5);
  const SetFamily f(g, {SubsetMask::empty(g), SubsetMask::of(g, {1, 2})});
  const auto full = saturation_report(f, butterfly_poset());
  const auto threaded = saturation_report(f, butterfly_poset(), {.threads = 3});
  CHECK(full.unsaturated == threaded.unsaturated);
  const auto fast = saturation_report(f, butterfly_poset(), {.fail_fast = true});
  CHECK(fast.saturated == full.saturated);
  CHECK(fast.unsaturated.size() >= 1);
}

TEST_CASE("saturated agrees with maximal free over every family at n <= 4") {
  for (const auto& q : {butterfly_poset(), n_poset()}) {
    for (int n = 1; n <= 4; ++n) {
      const GroundSet g(n);
      const auto all = canonical_subsets(g);
      const auto free = oracle::free_table(all, q);
      std::size_t saturated_count = 0;
      for (std::uint32_t idx = 0; idx < free.size(); ++idx) {
        bool maximal = free[idx];
        for (std::size_t i = 0; i < all.size() && maximal; ++i)
          if (!((idx >> i) & 1U) && free[idx | (1U << i)]) maximal = false;
        const SetFamily f = SetFamily::from_bits(g, oracle::pick(all, idx));
        const bool saturated = is_saturated(f, q);
        if (saturated != maximal) {
          FAIL_CHECK("disagreement at n=" << n << " family index " << idx);
          break;
        }
        if (saturated) {
          ++saturated_count;
          if (q == butterfly_poset()) CHECK(f.contains_bits(0));
        }
      }
      CHECK(saturated_count >= 1);
    }
  }
}

TEST_CASE("greedy examples") {
  const SetFamily seed = k2k_seed(6, 2);
  const SetFamily out = greedy_saturate(seed, butterfly_poset());
  CHECK(saturation_report(out, butterfly_poset()).saturated);
  CHECK(largest_added(out, seed) <= 2);
  CHECK(greedy_saturate(SetFamily(GroundSet(3)), butterfly_poset()) == SetFamily::power_set(GroundSet(3)));
  CHECK_THROWS_AS(greedy_saturate(family_of(4, {{1}, {2}, {1, 2, 3}, {1, 2, 4}}), butterfly_poset()),
                  UsageError);
}

TEST_CASE("greedy with explicit orders") {
  const GroundSet g(4);
  const SetFamily seed(g);
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto order = shuffled_candidates(seed, rng);
    CHECK(order.size() == 16);
    const SetFamily out = greedy_saturate(seed, n_poset(), order);
    CHECK(is_saturated(out, n_poset()));
  }
  std::vector<SubsetMask> partial{SubsetMask::empty(g)};
  CHECK_THROWS_AS(greedy_saturate(seed, n_poset(), partial), UsageError);
  std::vector<SubsetMask> twice = seed.missing();
  twice.push_back(SubsetMask::empty(g));
  CHECK_THROWS_AS(greedy_saturate(seed, n_poset(), twice), UsageError);
}

TEST_CASE("greedy output contains its seed and is saturated") {
  Rng rng(11);
  for (int n = 3; n <= 6; ++n) {
    const GroundSet g(n);
    for (int trial = 0; trial < 6; ++trial) {
      SetFamily seed(g);
      for (int i = 0; i < 3; ++i) {
        const SubsetMask s(g, static_cast<std::uint32_t>(uniform_below(rng, g.subset_count())));
        if (is_free(seed.with(s), butterfly_poset())) seed.insert(s);
      }
      const SetFamily out = greedy_saturate(seed, butterfly_poset(), shuffled_candidates(seed, rng));
      CHECK(contains_all(out, seed));
      CHECK(saturation_report(out, butterfly_poset()).saturated);
    }
  }
}

TEST_CASE("constructions") {
  CHECK(butterfly_construction(3) == SetFamily::power_set(GroundSet(3)));
  CHECK(butterfly_construction(4).size() == 13);
  CHECK(butterfly_construction(5).size() == 19);
  CHECK(butterfly_construction(6).size() == 26);
  for (int n = 2; n <= 10; ++n) CHECK(n_construction(n).size() == static_cast<std::size_t>(2 * n));
  CHECK(saturation_report(n_construction(6), n_poset()).saturated);
  CHECK_THROWS_AS(butterfly_construction(1), UsageError);
  CHECK_THROWS_AS(n_construction(1), UsageError);

  CHECK(k2k_seed(5, 3).size() == 10);
  CHECK(is_free(k2k_seed(6, 2), butterfly_poset()));
  CHECK_THROWS_AS(k2k_seed(3, 3), UsageError);
  CHECK_THROWS_AS(k2k_seed(4, 1), UsageError);

  const GroundSet g(5);
  const SetFamily kkk = kkk_seed(5, 3);
  CHECK(kkk.size() == 13);
  for (const auto& s : {std::initializer_list<int>{2, 3, 4, 5}, {1, 3, 4, 5}, {2, 3}, {1, 3}, {1, 2, 3, 4, 5}})
    CHECK(kkk.contains(SubsetMask::of(g, s)));
  CHECK(is_free(kkk_seed(6, 3), complete_bipartite_poset(3, 3)));
  CHECK_THROWS_AS(kkk_seed(4, 3), UsageError);
  CHECK_THROWS_AS(kkk_seed(5, 1), UsageError);
}

TEST_CASE("K2,k seeds complete with small sets and within the bound") {
  for (int k = 2; k <= 3; ++k) {
    const PosetSpec q = complete_bipartite_poset(k, 2);
    for (int n = k + 1; n <= 8; ++n) {
      const SetFamily seed = k2k_seed(n, k);
      CHECK(is_free(seed, q));
      const SetFamily out = greedy_saturate(seed, q);
      CHECK(is_saturated(out, q));
      CHECK(largest_added(out, seed) <= k);
      long long bound = n - k;
      for (int i = 0; i <= k; ++i) bound += binomial(n, i);
      CHECK(static_cast<long long>(out.size()) <= bound);
    }
  }
}

TEST_CASE("K3,3 seeds complete with small sets and within the bound") {
  const PosetSpec q = complete_bipartite_poset(3, 3);
  for (int n = 6; n <= 8; ++n) {
    const SetFamily seed = kkk_seed(n, 3);
    CHECK(is_free(seed, q));
    const SetFamily out = greedy_saturate(seed, q);
    CHECK(is_saturated(out, q));
    CHECK(largest_added(out, seed) < 5);
    long long bound = 2LL * (n - 5);
    for (int i = 0; i <= 4; ++i) bound += binomial(n, i);
    CHECK(static_cast<long long>(out.size()) <= bound);
  }
}
