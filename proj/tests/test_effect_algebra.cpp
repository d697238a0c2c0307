#include "doctest.h"

#include <optional>

#include "fixtures.hpp"
#include "lea/effect_algebra.hpp"

using namespace lea;
using namespace lea::testing;

namespace {

// Independent oracle: a literal transliteration of E1-E4 as quantified
// statements, structured differently from the library scan (no witness
// bookkeeping, early returns only).
bool oracle_e1(const EffectAlgebra& e) {
  for (Element x = 0; x < e.size; ++x)
    for (Element y = 0; y < e.size; ++y) {
      auto xy = e.plus_at(x, y);
      if (xy && (!e.plus_at(y, x) || *e.plus_at(y, x) != *xy)) return false;
    }
  return true;
}

bool oracle_e2(const EffectAlgebra& e) {
  for (Element x = 0; x < e.size; ++x)
    for (Element y = 0; y < e.size; ++y)
      for (Element z = 0; z < e.size; ++z) {
        auto xy = e.plus_at(x, y);
        if (!xy) continue;
        auto xyz = e.plus_at(*xy, z);
        if (!xyz) continue;
        auto yz = e.plus_at(y, z);
        if (!yz) return false;
        auto x_yz = e.plus_at(x, *yz);
        if (!x_yz || *x_yz != *xyz) return false;
      }
  return true;
}

bool oracle_e3(const EffectAlgebra& e) {
  for (Element x = 0; x < e.size; ++x) {
    int complements = 0;
    for (Element y = 0; y < e.size; ++y)
      if (e.plus_at(x, y) == std::optional<Element>(e.one)) ++complements;
    if (complements != 1) return false;
    if (e.plus_at(x, e.inv_at(x)) != std::optional<Element>(e.one)) return false;
  }
  return true;
}

bool oracle_e4(const EffectAlgebra& e) {
  for (Element x = 0; x < e.size; ++x)
    if (e.plus_at(x, e.one) && x != e.zero) return false;
  return true;
}

bool oracle_all(const EffectAlgebra& e) {
  return oracle_e1(e) && oracle_e2(e) && oracle_e3(e) && oracle_e4(e);
}

} // namespace

TEST_CASE("check_effect_axioms accepts the named models") {
  for (const auto& e : {b2(), l3(), l4(), boolean4(), horizontal_sum(), hexagon()}) {
    CAPTURE(e.size);
    REQUIRE(oracle_all(e));
    auto report = check_effect_axioms(e);
    REQUIRE(report.structural_ok);
    CHECK(report.all_passed());
  }
}

TEST_CASE("B2 with 1+1 = 1 fails E4 with witness x = 1") {
  auto bad = b2();
  bad.set_plus(1, 1, 1);
  REQUIRE_FALSE(oracle_e4(bad));
  auto report = check_effect_axioms(bad);
  REQUIRE(report.structural_ok);
  auto* e4 = report.find("E4");
  REQUIRE(e4 != nullptr);
  CHECK_FALSE(e4->passed);
  CHECK(e4->witness == std::vector<Element>{1});
}

TEST_CASE("library axiom verdicts agree with the oracle on mutations") {
  // Flip one cell of each fixture at a time and compare verdicts.
  for (const auto& base : {b2(), l3(), boolean4(), horizontal_sum()}) {
    for (int i = 0; i < base.size * base.size; ++i) {
      for (int v = -1; v < base.size; ++v) {
        EffectAlgebra mutant = base;
        mutant.plus[i] = v < 0 ? std::nullopt : std::optional<Element>(v);
        auto report = check_effect_axioms(mutant);
        REQUIRE(report.structural_ok);
        CHECK(report.find("E1")->passed == oracle_e1(mutant));
        CHECK(report.find("E2")->passed == oracle_e2(mutant));
        CHECK((report.find("E3")->passed && report.find("E3-inv")->passed) ==
              oracle_e3(mutant));
        CHECK(report.find("E4")->passed == oracle_e4(mutant));
      }
    }
  }
}

TEST_CASE("structural errors are distinct from axiom failures") {
  auto e = l3();
  e.inv.pop_back();
  auto report = check_effect_axioms(e);
  CHECK_FALSE(report.structural_ok);
  CHECK(report.checks.empty());
  CHECK_FALSE(report.all_passed());

  EffectAlgebra empty;
  CHECK_FALSE(check_effect_axioms(empty).structural_ok);

  auto oversized = l3();
  Limits tight;
  tight.max_structure_size = 2;
  CHECK_FALSE(check_effect_axioms(oversized, tight).structural_ok);
}

TEST_CASE("induced order of the named models") {
  SUBCASE("B2: only 0<=0, 0<=1, 1<=1") {
    auto ord = induced_order(b2());
    CHECK(ord.leq_at(0, 0));
    CHECK(ord.leq_at(0, 1));
    CHECK(ord.leq_at(1, 1));
    CHECK_FALSE(ord.leq_at(1, 0));
  }
  SUBCASE("L3 is the chain 0 < a < 1") {
    auto ord = induced_order(l3());
    for (Element a = 0; a < 3; ++a)
      for (Element b = 0; b < 3; ++b) CHECK(ord.leq_at(a, b) == (a <= b));
  }
  SUBCASE("Boolean 4: a and b incomparable") {
    auto ord = induced_order(boolean4());
    CHECK_FALSE(ord.leq_at(1, 2));
    CHECK_FALSE(ord.leq_at(2, 1));
    CHECK(ord.leq_at(0, 1));
    CHECK(ord.leq_at(1, 3));
  }
}

TEST_CASE("induced order agrees with a direct witness scan") {
  for (const auto& e : {b2(), l3(), l4(), boolean4(), horizontal_sum(), hexagon()}) {
    auto ord = induced_order(e);
    for (Element a = 0; a < e.size; ++a)
      for (Element b = 0; b < e.size; ++b) {
        bool witness = false;
        for (Element c = 0; c < e.size; ++c)
          if (e.plus_at(a, c) == std::optional<Element>(b)) witness = true;
        CHECK(ord.leq_at(a, b) == witness);
      }
  }
}

TEST_CASE("a sum table with an order cycle is rejected") {
  // 1 <= 2 via 1+1 = 2 and 2 <= 1 via 2+2 = 1: antisymmetry fails.
  auto bad = make_effect(3, 0, 2, {2, 1, 0},
                         {0, 1, 2,
                          1, 2, -1,
                          2, -1, -1});
  bad.set_plus(1, 1, 2);
  bad.set_plus(2, 2, 1);
  CHECK_THROWS_AS(induced_order(bad), Error);
}

TEST_CASE("ominus") {
  SUBCASE("L3: 1 - a = a") {
    CHECK(ominus(l3(), 1, 2) == std::optional<Element>(1));
  }
  SUBCASE("b - 0 = b in every model") {
    for (const auto& e : {b2(), l3(), l4(), boolean4(), horizontal_sum()})
      for (Element b = 0; b < e.size; ++b)
        CHECK(ominus(e, e.zero, b) == std::optional<Element>(b));
  }
  SUBCASE("L4: b - a = a") {
    CHECK(ominus(l4(), 1, 2) == std::optional<Element>(1));
  }
  SUBCASE("undefined when a is not below b") {
    CHECK_FALSE(ominus(boolean4(), 1, 2).has_value()); // a, b incomparable
  }
}

TEST_CASE("ominus consistency: a <= b gives the unique witness") {
  for (const auto& e : {b2(), l3(), l4(), boolean4(), horizontal_sum(), hexagon()}) {
    auto ord = induced_order(e);
    for (Element a = 0; a < e.size; ++a)
      for (Element b = 0; b < e.size; ++b) {
        if (!ord.leq_at(a, b)) continue;
        auto diff = ominus(e, a, b);
        REQUIRE(diff.has_value());
        CHECK(e.plus_at(a, *diff) == std::optional<Element>(b));
        int witnesses = 0;
        for (Element c = 0; c < e.size; ++c)
          if (e.plus_at(a, c) == std::optional<Element>(b)) ++witnesses;
        CHECK(witnesses == 1);
      }
  }
}

TEST_CASE("lattice structure") {
  SUBCASE("chains: meet = min, join = max") {
    for (const auto& e : {b2(), l3(), l4()}) {
      auto lat = lattice_structure(e);
      REQUIRE(lat.has_value());
      for (Element a = 0; a < e.size; ++a)
        for (Element b = 0; b < e.size; ++b) {
          CHECK(lat->meet_at(a, b) == std::min(a, b));
          CHECK(lat->join_at(a, b) == std::max(a, b));
        }
    }
  }
  SUBCASE("Boolean 4: a^b = 0, avb = 1") {
    auto lat = lattice_structure(boolean4());
    REQUIRE(lat.has_value());
    CHECK(lat->meet_at(1, 2) == 0);
    CHECK(lat->join_at(1, 2) == 3);
  }
  SUBCASE("horizontal sum: a^b = 0, avb = 1") {
    auto lat = lattice_structure(horizontal_sum());
    REQUIRE(lat.has_value());
    CHECK(lat->meet_at(1, 2) == 0);
    CHECK(lat->join_at(1, 2) == 3);
  }
  SUBCASE("hexagon is not a lattice") {
    CHECK_FALSE(lattice_structure(hexagon()).has_value());
  }
}

TEST_CASE("meet and join are commutative, associative, absorptive") {
  for (const auto& e : {l4(), boolean4(), horizontal_sum()}) {
    auto lat = lattice_structure(e);
    REQUIRE(lat.has_value());
    const int n = e.size;
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b) {
        CHECK(lat->meet_at(a, b) == lat->meet_at(b, a));
        CHECK(lat->join_at(a, b) == lat->join_at(b, a));
        CHECK(lat->meet_at(a, lat->join_at(a, b)) == a);
        CHECK(lat->join_at(a, lat->meet_at(a, b)) == a);
        for (Element c = 0; c < n; ++c) {
          CHECK(lat->meet_at(lat->meet_at(a, b), c) == lat->meet_at(a, lat->meet_at(b, c)));
          CHECK(lat->join_at(lat->join_at(a, b), c) == lat->join_at(a, lat->join_at(b, c)));
        }
      }
  }
}

TEST_CASE("check_meet_translation holds on the named lattice models") {
  CHECK(check_meet_translation(b2()));
  CHECK(check_meet_translation(l4()));
  CHECK(check_meet_translation(boolean4()));
  CHECK(check_meet_translation(l3()));
  CHECK(check_meet_translation(horizontal_sum()));
}

TEST_CASE("orthoalgebra predicate") {
  CHECK(is_orthoalgebra(boolean4()));
  CHECK_FALSE(is_orthoalgebra(l3())); // a+a = 1
  CHECK(is_orthoalgebra(b2()));
}

TEST_CASE("MV predicate") {
  CHECK(is_mv_effect(l3()));
  CHECK(is_mv_effect(boolean4()));
  CHECK_FALSE(is_mv_effect(horizontal_sum())); // witness x = a, y = b
}

TEST_CASE("MV witness in the horizontal sum is (a, b)") {
  auto e = horizontal_sum();
  auto lat = lattice_structure(e);
  REQUIRE(lat.has_value());
  // (a ^ b') + b = (a ^ b) + b = 0 + b = b, while (b ^ a') + a = a.
  auto lhs = e.plus_at(lat->meet_at(1, e.inv_at(2)), 2);
  auto rhs = e.plus_at(lat->meet_at(2, e.inv_at(1)), 1);
  REQUIRE(lhs.has_value());
  REQUIRE(rhs.has_value());
  CHECK(*lhs == 2);
  CHECK(*rhs == 1);
}

TEST_CASE("F2: a+b defined iff a <= b'") {
  for (const auto& e : {b2(), l3(), l4(), boolean4(), horizontal_sum(), hexagon()}) {
    auto ord = induced_order(e);
    for (Element a = 0; a < e.size; ++a)
      for (Element b = 0; b < e.size; ++b)
        CHECK(e.plus_at(a, b).has_value() == ord.leq_at(a, e.inv_at(b)));
  }
}

TEST_CASE("the involution is antitone") {
  for (const auto& e : {b2(), l3(), l4(), boolean4(), horizontal_sum(), hexagon()}) {
    auto ord = induced_order(e);
    for (Element a = 0; a < e.size; ++a)
      for (Element b = 0; b < e.size; ++b)
        if (ord.leq_at(a, b)) CHECK(ord.leq_at(e.inv_at(b), e.inv_at(a)));
  }
}
