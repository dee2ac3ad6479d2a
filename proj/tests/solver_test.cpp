#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "possat/errors.hpp"
#include "possat/saturation.hpp"
#include "possat/serialize.hpp"
#include "possat/solver.hpp"

using namespace possat;

namespace {

struct Frozen {
  int n;
  std::size_t value;
  std::size_t count;
};

// Minimum size and number of saturated families, from a standalone brute
// force over all subfamilies of 2^[n].
constexpr Frozen kButterfly[] = {{1, 2, 1}, {2, 4, 1}, {3, 8, 1}, {4, 13, 12}};
constexpr Frozen kN[] = {{1, 2, 1}, {2, 4, 1}, {3, 6, 9}, {4, 8, 118}};

/// Saturated subfamilies by the maximal-free characterisation, sorted like the library.
std::vector<SetFamily> oracle_saturated(int n, const PosetSpec& q) {
  const GroundSet g(n);
  const auto all = canonical_subsets(g);
  const auto free = oracle::free_table(all, q);
  std::vector<SetFamily> out;
  for (std::uint32_t idx = 0; idx < free.size(); ++idx) {
    if (!free[idx]) continue;
    bool maximal = true;
    for (std::size_t i = 0; i < all.size() && maximal; ++i)
      if (!((idx >> i) & 1U) && free[idx | (1U << i)]) maximal = false;
    if (maximal) out.push_back(SetFamily::from_bits(g, oracle::pick(all, idx)));
  }
  std::sort(out.begin(), out.end(), family_less);
  return out;
}

}  // namespace

TEST_CASE("frozen exact values") {
  for (const auto& [q, table] : {std::pair{butterfly_poset(), std::span<const Frozen>(kButterfly)},
                                 std::pair{n_poset(), std::span<const Frozen>(kN)}}) {
    for (const auto& row : table) {
      const auto r = exact_sat_star(row.n, q);
      CHECK(r.exact);
      CHECK(r.value == row.value);
      CHECK(r.certificate.size() == row.value);
      CHECK(is_saturated(r.certificate, q));
      REQUIRE(r.enumerated_count.has_value());
      CHECK(*r.enumerated_count == row.count);
      CHECK(enumerate_saturated_families(row.n, q).size() == row.count);
    }
  }
}

TEST_CASE("enumeration matches the maximal-free oracle") {
  for (const auto& q : {butterfly_poset(), n_poset(), chain_poset(2), antichain_poset(2)}) {
    for (int n = 1; n <= 4; ++n) {
      const auto lib = enumerate_saturated_families(n, q);
      CHECK(lib == oracle_saturated(n, q));
    }
  }
}

TEST_CASE("threads and cap do not change enumeration") {
  const auto one = enumerate_saturated_families(4, n_poset(), std::nullopt, 1);
  const auto three = enumerate_saturated_families(4, n_poset(), std::nullopt, 3);
  CHECK(one == three);
  const auto capped = enumerate_saturated_families(4, n_poset(), 5);
  REQUIRE(capped.size() == 5);
  CHECK(std::equal(capped.begin(), capped.end(), one.begin()));
}

TEST_CASE("branch and bound agrees with the hypergraph route") {
  for (const auto& q : {butterfly_poset(), n_poset(), chain_poset(3)}) {
    for (int n = 2; n <= 4; ++n) {
      const auto a = exact_sat_star(n, q, {.method = SolveMethod::CopyHypergraph});
      const auto b = exact_sat_star(n, q, {.method = SolveMethod::BranchAndBound});
      CHECK(b.exact);
      CHECK(a.value == b.value);
      CHECK(is_saturated(b.certificate, q));
    }
  }
}

TEST_CASE("branch and bound at n = 5") {
  // A maximal antichain can be {{}}; a maximal chain has n + 1 sets.
  const auto chain = exact_sat_star(5, chain_poset(2), {.budget = std::chrono::seconds(30)});
  CHECK(chain.exact);
  CHECK(chain.value == 1);
  const auto antichain = exact_sat_star(5, antichain_poset(2), {.budget = std::chrono::seconds(30)});
  CHECK(antichain.exact);
  CHECK(antichain.value == 6);

  // Out of budget the greedy incumbent or better comes back, flagged inexact.
  const auto r = exact_sat_star(5, n_poset(), {.budget = std::chrono::milliseconds(300)});
  CHECK(is_saturated(r.certificate, n_poset()));
  CHECK(r.value <= 10);
  CHECK(r.value == r.certificate.size());
  CHECK_FALSE(r.enumerated_count.has_value());
  CHECK_THROWS_AS(exact_sat_star(5, n_poset(), {.method = SolveMethod::CopyHypergraph}), UsageError);
}

TEST_CASE("capped enumeration at n = 5") {
  const auto families = enumerate_saturated_families(5, butterfly_poset(), 3);
  CHECK(families.size() == 3);
  for (const auto& f : families) CHECK(is_saturated(f, butterfly_poset()));
  CHECK_THROWS_AS(enumerate_saturated_families(5, butterfly_poset()), UsageError);
  CHECK_THROWS_AS(enumerate_saturated_families(6, butterfly_poset(), 1), UsageError);
  CHECK_THROWS_AS(enumerate_saturated_families(3, butterfly_poset(), 0), UsageError);
}

TEST_CASE("random greedy upper bounds") {
  const auto r = upper_bound_via_random_greedy(6, n_poset(), 20, 7);
  CHECK_FALSE(r.exact);
  CHECK(is_saturated(r.certificate, n_poset()));
  CHECK(r.value == r.certificate.size());
  const auto again = upper_bound_via_random_greedy(6, n_poset(), 20, 7);
  CHECK(again.certificate == r.certificate);

  const SetFamily seeds[] = {n_construction(6)};
  const auto seeded = upper_bound_via_random_greedy(6, n_poset(), 1, 7, seeds);
  CHECK(seeded.value == 12);

  for (int n = 2; n <= 4; ++n) {
    const auto ub = upper_bound_via_random_greedy(n, butterfly_poset(), 5, 1);
    CHECK(ub.value >= exact_sat_star(n, butterfly_poset()).value);
  }
  CHECK_THROWS_AS(upper_bound_via_random_greedy(4, n_poset(), 0, 1), UsageError);
}

TEST_CASE("solve result serialization") {
  const auto r = exact_sat_star(3, butterfly_poset());
  const std::string json = to_json(r, false);
  CHECK(json.starts_with(R"({"n":3,"poset":"butterfly","value":8,"exact":true,)"));
  CHECK(json.find("elapsed_ms") == std::string::npos);
  CHECK(to_json(r).find("elapsed_ms") != std::string::npos);
}
