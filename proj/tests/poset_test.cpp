#include <doctest.h>

#include "possat/errors.hpp"
#include "possat/poset.hpp"

using namespace possat;

TEST_CASE("butterfly matrix validates") {
  RelationMatrix m(4, std::vector<bool>(4));
  m[0][2] = m[0][3] = m[1][2] = m[1][3] = true;
  const PosetSpec q = validate_poset(m);
  CHECK(q.size() == 4);
  CHECK(q.relation_count() == 4);
}

TEST_CASE("reflexive cell is reported at its element") {
  RelationMatrix m(2, std::vector<bool>(2));
  m[0][0] = true;
  try {
    validate_poset(m);
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    REQUIRE(e.violations().size() == 1);
    CHECK(e.violations()[0] == "reflexive at element 0");
  }
}

TEST_CASE("missing transitive pair is reported at (a,c)") {
  RelationMatrix m(3, std::vector<bool>(3));
  m[0][1] = m[1][2] = true;
  try {
    validate_poset(m);
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    REQUIRE(e.violations().size() == 1);
    CHECK(e.violations()[0].find("(0,2)") != std::string::npos);
  }
}

TEST_CASE("every violation is listed") {
  RelationMatrix m(3, std::vector<bool>(3));
  m[0][0] = true;
  m[1][2] = m[2][1] = true;
  try {
    validate_poset(m);
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(e.violations().size() >= 2);
  }
  CHECK_THROWS_AS(validate_poset(RelationMatrix{{false, false}, {false}}), UsageError);
}

TEST_CASE("complete bipartite posets") {
  const PosetSpec b = complete_bipartite_poset(2, 2);
  CHECK(b.size() == 4);
  CHECK(b.relation_count() == 4);
  CHECK(b == butterfly_poset());
  const PosetSpec k23 = complete_bipartite_poset(3, 2);
  CHECK(k23.size() == 5);
  CHECK(k23.relation_count() == 6);
  CHECK(k23.name() == "K2,3");
  const PosetSpec chain = complete_bipartite_poset(1, 1);
  CHECK(chain.size() == 2);
  CHECK(chain.less(0, 1));
  CHECK_THROWS_AS(complete_bipartite_poset(0, 2), UsageError);
  CHECK_THROWS_AS(complete_bipartite_poset(2, 0), UsageError);
}

TEST_CASE("complete bipartite posets are valid strict orders up to 6x6") {
  for (int s = 1; s <= 6; ++s) {
    for (int t = 1; t <= 6; ++t) {
      const PosetSpec q = complete_bipartite_poset(s, t);
      CHECK(q.relation_count() == s * t);
      CHECK_NOTHROW(validate_poset(q.matrix()));
      for (int a = 0; a < s; ++a)
        for (int b = 0; b < s; ++b) CHECK_FALSE(q.comparable(a, b));
    }
  }
}

TEST_CASE("N poset") {
  const PosetSpec q = n_poset();
  CHECK(q.size() == 4);
  CHECK(q.relation_count() == 3);
  CHECK(q.less(0, 1));
  CHECK(q.less(2, 1));
  CHECK(q.less(2, 3));
  CHECK_FALSE(q.comparable(0, 2));
  CHECK_FALSE(q.comparable(0, 3));
  CHECK_FALSE(q.comparable(1, 3));
  CHECK_NOTHROW(validate_poset(q.matrix()));
  CHECK(q.relation_count() != butterfly_poset().relation_count());
}

TEST_CASE("pairs are closed transitively; cycles are rejected") {
  const PosetSpec chain = poset_from_pairs(3, {{0, 1}, {1, 2}});
  CHECK(chain.less(0, 2));
  CHECK(chain.height(2) == 2);
  CHECK(chain.depth(0) == 2);
  CHECK_THROWS_AS(poset_from_pairs(2, {{0, 1}, {1, 0}}), ValidationError);
  CHECK_THROWS_AS(poset_from_pairs(2, {{0, 2}}), UsageError);
}
