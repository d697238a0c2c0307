#include "doctest.h"

#include "fixtures.hpp"
#include "lea/transform.hpp"

using namespace lea;
using namespace lea::testing;

namespace {

struct Pair {
  EffectAlgebra effect;
  EffectGroupoid groupoid;
};

std::vector<Pair> named_pairs() {
  return {{b2(), b2_groupoid()},
          {l3(), l3_groupoid()},
          {l4(), l4_groupoid()},
          {boolean4(), boolean4_groupoid()},
          {horizontal_sum(), horizontal_sum_groupoid()}};
}

} // namespace

TEST_CASE("groupoid_from_effect reproduces the hand-evaluated tables") {
  for (const auto& [effect, expected] : named_pairs()) {
    CAPTURE(effect.size);
    auto g = groupoid_from_effect(effect);
    CHECK(same_tables(g, expected));
    CHECK(check_ng_axioms(g).all_passed());
  }
}

TEST_CASE("groupoid_from_effect spot values") {
  SUBCASE("L3: a.a = 0, a.1 = 1.a = a") {
    auto g = groupoid_from_effect(l3());
    CHECK(g.dot_at(1, 1) == 0);
    CHECK(g.dot_at(1, 2) == 1);
    CHECK(g.dot_at(2, 1) == 1);
  }
  SUBCASE("Boolean 4: a.a = a, a.b = 0") {
    auto g = groupoid_from_effect(boolean4());
    CHECK(g.dot_at(1, 1) == 1);
    CHECK(g.dot_at(1, 2) == 0);
  }
  SUBCASE("B2: 1.1 = 1") {
    CHECK(groupoid_from_effect(b2()).dot_at(1, 1) == 1);
  }
}

TEST_CASE("groupoid_from_effect refuses a non-lattice effect algebra") {
  REQUIRE(check_effect_axioms(hexagon()).all_passed());
  CHECK_THROWS_WITH_AS(groupoid_from_effect(hexagon()),
                       doctest::Contains("not a lattice"), Error);
}

TEST_CASE("effect_from_groupoid reproduces the algebras") {
  for (const auto& [expected, groupoid] : named_pairs()) {
    auto e = effect_from_groupoid(groupoid);
    CHECK(same_tables(e, expected));
    CHECK(check_effect_axioms(e).all_passed());
  }
}

TEST_CASE("effect_from_groupoid spot values") {
  SUBCASE("L3 groupoid: a+a = (a.a)' = 1") {
    auto e = effect_from_groupoid(l3_groupoid());
    CHECK(e.plus_at(1, 1) == std::optional<Element>(2));
  }
  SUBCASE("horizontal sum: a+b undefined, a+a = 1") {
    auto e = effect_from_groupoid(horizontal_sum_groupoid());
    CHECK_FALSE(e.plus_at(1, 2).has_value());
    CHECK(e.plus_at(1, 1) == std::optional<Element>(3));
  }
}

TEST_CASE("round trips on the named models") {
  for (const auto& [effect, groupoid] : named_pairs()) {
    CHECK(verify_round_trip_effect(effect));
    CHECK(verify_round_trip_groupoid(groupoid));
  }
}

TEST_CASE("characterization equivalences on the named models") {
  CHECK(check_orthoalgebra_equivalence(boolean4())); // both true
  CHECK(is_orthoalgebra(boolean4()));
  CHECK(check_orthoalgebra_equivalence(l3())); // both false
  CHECK_FALSE(is_orthoalgebra(l3()));
  CHECK(check_orthoalgebra_equivalence(b2()));

  CHECK(check_mv_equivalence(l3())); // both true
  CHECK(is_mv_effect(l3()));
  CHECK(check_mv_equivalence(horizontal_sum())); // both false
  CHECK_FALSE(is_mv_effect(horizontal_sum()));
  CHECK(check_mv_equivalence(b2()));
}

TEST_CASE("order preservation: induced order equals groupoid order") {
  for (const auto& [effect, groupoid] : named_pairs()) {
    (void)groupoid;
    CHECK(induced_order(effect) == groupoid_order(groupoid_from_effect(effect)));
  }
}

TEST_CASE("ominus translates to b.a'") {
  for (const auto& [effect, groupoid] : named_pairs()) {
    (void)groupoid;
    auto g = groupoid_from_effect(effect);
    auto ord = induced_order(effect);
    for (Element a = 0; a < effect.size; ++a)
      for (Element b = 0; b < effect.size; ++b) {
        if (!ord.leq_at(a, b)) continue;
        auto diff = ominus(effect, a, b);
        REQUIRE(diff.has_value());
        CHECK(*diff == g.dot_at(b, g.inv_at(a)));
      }
  }
}

TEST_CASE("partiality criterion: a+b defined iff a.b = 0") {
  for (const auto& [effect, groupoid] : named_pairs()) {
    (void)groupoid;
    auto g = groupoid_from_effect(effect);
    for (Element a = 0; a < effect.size; ++a)
      for (Element b = 0; b < effect.size; ++b)
        CHECK(effect.plus_at(a, b).has_value() == (g.dot_at(a, b) == g.zero));
  }
}
