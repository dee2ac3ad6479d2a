#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "possat/embedding.hpp"
#include "possat/errors.hpp"
#include "possat/random.hpp"

using namespace possat;

namespace {

SetFamily family_of(int n, std::initializer_list<std::initializer_list<int>> sets) {
  const GroundSet g(n);
  std::vector<SubsetMask> members;
  for (const auto& s : sets) members.push_back(SubsetMask::of(g, s));
  return SetFamily(g, members);
}

SetFamily random_family(Rng& rng, int n) {
  const GroundSet g(n);
  std::vector<std::uint32_t> bits;
  for (std::uint32_t s = 0; s < g.subset_count(); ++s)
    if (uniform_below(rng, 3) == 0) bits.push_back(s);
  return SetFamily::from_bits(g, bits);
}

}  // namespace

TEST_CASE("butterfly found in a four-set family") {
  const SetFamily f = family_of(4, {{1}, {2}, {1, 2, 3}, {1, 2, 4}});
  const auto w = find_induced_copy(f, butterfly_poset());
  REQUIRE(w.has_value());
  CHECK(is_induced_copy(*w));
  std::vector<std::uint32_t> used;
  for (const auto& s : w->assignment) used.push_back(s.bits());
  std::sort(used.begin(), used.end());
  CHECK(used == std::vector<std::uint32_t>(f.bits().begin(), f.bits().end()));
  CHECK(count_induced_copies(f, butterfly_poset(), 10) == 1);
}

TEST_CASE("a chain of four sets has no butterfly") {
  const SetFamily f = family_of(3, {{}, {1}, {1, 2}, {1, 2, 3}});
  CHECK_FALSE(find_induced_copy(f, butterfly_poset()).has_value());
  CHECK(count_induced_copies(f, butterfly_poset(), 10) == 0);
  CHECK(find_induced_copy(f, chain_poset(4)).has_value());
}

TEST_CASE("induced means incomparable pairs stay incomparable") {
  // {} < {1} < {1,2} plus {2}: not an induced antichain of size 3.
  const SetFamily f = family_of(2, {{}, {1}, {2}, {1, 2}});
  CHECK_FALSE(find_induced_copy(f, antichain_poset(3)).has_value());
  CHECK(find_induced_copy(f, antichain_poset(2)).has_value());
  CHECK_FALSE(find_induced_copy(f, butterfly_poset()).has_value());
}

TEST_CASE("required member must be in the family and in the image") {
  const SetFamily f = family_of(4, {{1}, {2}, {1, 2, 3}, {1, 2, 4}, {3}});
  const GroundSet g(4);
  CHECK_THROWS_AS(find_induced_copy(f, butterfly_poset(), SubsetMask::of(g, {4})), UsageError);
  CHECK_FALSE(find_induced_copy(f, butterfly_poset(), SubsetMask::of(g, {3})).has_value());
  const auto w = find_induced_copy(f, butterfly_poset(), SubsetMask::of(g, {1, 2, 4}));
  REQUIRE(w.has_value());
  CHECK(std::count(w->assignment.begin(), w->assignment.end(), SubsetMask::of(g, {1, 2, 4})) == 1);
}

TEST_CASE("is_induced_copy rejects non-injective and wrong-shape assignments") {
  const PosetSpec b = butterfly_poset();
  const std::vector<std::uint32_t> good{0b0001, 0b0010, 0b0111, 0b1011};
  CHECK(is_induced_copy(b, good));
  const std::vector<std::uint32_t> repeated{0b0001, 0b0001, 0b0111, 0b1011};
  CHECK_FALSE(is_induced_copy(b, repeated));
  const std::vector<std::uint32_t> nested_tops{0b0001, 0b0010, 0b0011, 0b0111};
  CHECK_FALSE(is_induced_copy(b, nested_tops));
  const std::vector<std::uint32_t> short_image{0b0001, 0b0010, 0b0111};
  CHECK_FALSE(is_induced_copy(b, short_image));
}

TEST_CASE("search agrees with the brute-force oracle on random families") {
  const std::vector<PosetSpec> posets{butterfly_poset(), n_poset(), chain_poset(2), antichain_poset(2),
                                      complete_bipartite_poset(3, 2)};
  Rng rng(2024);
  for (int trial = 0; trial < 256; ++trial) {
    const int n = 3 + static_cast<int>(uniform_below(rng, 2));
    const SetFamily f = random_family(rng, n);
    for (const auto& q : posets) {
      const bool expected = oracle::has_copy(f.bits(), q);
      const auto w = find_induced_copy(f, q);
      CHECK(w.has_value() == expected);
      if (w) {
        CHECK(is_induced_copy(*w));
        std::vector<std::uint32_t> img;
        for (const auto& s : w->assignment) img.push_back(s.bits());
        CHECK(oracle::pattern_matches(q, img));
      }
    }
  }
}

TEST_CASE("copy counts are assignment counts divided by automorphisms") {
  const std::vector<PosetSpec> posets{butterfly_poset(), n_poset(), chain_poset(3), antichain_poset(2)};
  Rng rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const SetFamily f = random_family(rng, 3);
    for (const auto& q : posets) {
      const auto assignments = oracle::all_assignments(f.bits(), q);
      const std::size_t expected = assignments.size() / oracle::automorphism_count(q);
      CHECK(count_induced_copies(f, q, 1'000'000) == expected);
      if (expected > 1) CHECK(count_induced_copies(f, q, 1) == 1);
    }
  }
  CHECK_THROWS_AS(count_induced_copies(SetFamily(GroundSet(2)), butterfly_poset(), 0), UsageError);
}

TEST_CASE("containing a copy is monotone under adding sets") {
  Rng rng(5);
  const PosetSpec b = butterfly_poset();
  for (int trial = 0; trial < 100; ++trial) {
    SetFamily f = random_family(rng, 4);
    const bool before = find_induced_copy(f, b).has_value();
    f.insert(SubsetMask(f.ground(), static_cast<std::uint32_t>(uniform_below(rng, 16))));
    if (before) CHECK(find_induced_copy(f, b).has_value());
  }
}

TEST_CASE("forced image in CopyFinder") {
  const GroundSet g(4);
  const CopyFinder finder(butterfly_poset(), g);
  const std::vector<std::uint32_t> members{0b0001, 0b0010, 0b0111};
  CHECK_FALSE(finder.exists(members));
  CHECK(finder.exists(members, 0b1011u));
  CHECK_FALSE(finder.exists(members, 0b1000u));
  const auto img = finder.find(members, 0b1011u);
  REQUIRE(img.has_value());
  CHECK(std::count(img->begin(), img->end(), 0b1011u) == 1);
}
