#include "doctest.h"

#include <algorithm>

#include "fixtures.hpp"
#include "lea/effect_groupoid.hpp"

using namespace lea;
using namespace lea::testing;

namespace {

// Independent transliterations of NG0-NG8, used to cross-check the library
// verdicts on mutated tables.
bool oracle_ng(const EffectGroupoid& g) {
  const int n = g.size;
  auto d = [&](Element a, Element b) { return g.dot_at(a, b); };
  auto i = [&](Element a) { return g.inv_at(a); };
  for (Element x = 0; x < n; ++x) {
    if (d(g.one, x) != x || d(x, g.one) != x) return false;          // NG0
    if (i(i(x)) != x) return false;                                  // NG1
    if (d(x, g.zero) != g.zero || d(g.zero, x) != g.zero) return false; // NG2
  }
  if (i(g.zero) != g.one) return false; // NG3
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      if (d(x, d(y, i(x))) != g.zero) return false;                  // NG4
      if (d(d(y, i(x)), x) != g.zero) return false;
      if (d(x, y) != d(y, i(d(i(d(i(y), i(x))), i(x))))) return false; // NG5
      const Element p = i(d(i(y), x));
      const Element q = i(d(i(x), y));
      if (d(x, p) != d(p, x) || d(p, x) != d(q, y)) return false;    // NG6
      for (Element z = 0; z < n; ++z) {                              // NG7
        const Element lhs = d(i(d(i(d(x, i(y))), i(y))), z);
        const Element rhs = i(d(i(d(d(x, z), i(d(y, z)))), i(d(y, z))));
        if (lhs != rhs) return false;
      }
    }
  for (Element x = 0; x < n; ++x)                                     // NG8
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z) {
        if (d(i(x), i(y)) != g.zero) continue;
        if (d(i(d(x, y)), i(z)) != g.zero) continue;
        if (d(i(y), i(z)) != g.zero) return false;
        if (d(i(x), i(d(y, z))) != g.zero) return false;
        if (d(d(x, y), z) != d(x, d(y, z))) return false;
      }
  return true;
}

std::vector<EffectGroupoid> named_groupoids() {
  return {b2_groupoid(), l3_groupoid(), l4_groupoid(), boolean4_groupoid(),
          horizontal_sum_groupoid()};
}

} // namespace

TEST_CASE("check_ng_axioms accepts the named groupoids") {
  for (const auto& g : named_groupoids()) {
    CAPTURE(g.size);
    REQUIRE(oracle_ng(g));
    auto report = check_ng_axioms(g);
    REQUIRE(report.structural_ok);
    CHECK(report.all_passed());
  }
}

TEST_CASE("B2 groupoid with 1.1 = 0 fails NG0") {
  auto bad = b2_groupoid();
  bad.set_dot(1, 1, 0);
  REQUIRE_FALSE(oracle_ng(bad));
  auto report = check_ng_axioms(bad);
  REQUIRE(report.structural_ok);
  auto* ng0 = report.find("NG0");
  REQUIRE(ng0 != nullptr);
  CHECK_FALSE(ng0->passed);
  CHECK(ng0->witness == std::vector<Element>{1});
}

TEST_CASE("library NG verdict agrees with the oracle on single-cell mutations") {
  for (const auto& base : named_groupoids()) {
    for (int cell = 0; cell < base.size * base.size; ++cell)
      for (Element v = 0; v < base.size; ++v) {
        EffectGroupoid mutant = base;
        mutant.dot[cell] = v;
        auto report = check_ng_axioms(mutant);
        REQUIRE(report.structural_ok);
        CHECK(report.all_passed() == oracle_ng(mutant));
      }
  }
}

TEST_CASE("structural problems are reported before axioms") {
  auto g = l3_groupoid();
  g.dot[3] = 7;
  auto report = check_ng_axioms(g);
  CHECK_FALSE(report.structural_ok);
  CHECK(report.checks.empty());
}

TEST_CASE("groupoid order") {
  SUBCASE("0 <= x <= 1 in every model") {
    for (const auto& g : named_groupoids()) {
      auto ord = groupoid_order(g);
      for (Element x = 0; x < g.size; ++x) {
        CHECK(ord.leq_at(g.zero, x));
        CHECK(ord.leq_at(x, g.one));
      }
    }
  }
  SUBCASE("L3 groupoid gives the chain order") {
    auto ord = groupoid_order(l3_groupoid());
    for (Element a = 0; a < 3; ++a)
      for (Element b = 0; b < 3; ++b) CHECK(ord.leq_at(a, b) == (a <= b));
  }
  SUBCASE("horizontal sum: a and b incomparable") {
    auto g = horizontal_sum_groupoid();
    // a.b' = a.b = b != 0
    CHECK(g.dot_at(1, g.inv_at(2)) == 2);
    auto ord = groupoid_order(g);
    CHECK_FALSE(ord.leq_at(1, 2));
    CHECK_FALSE(ord.leq_at(2, 1));
  }
}

TEST_CASE("groupoid meet and join") {
  SUBCASE("meet(x, 1) = x in every model") {
    for (const auto& g : named_groupoids())
      for (Element x = 0; x < g.size; ++x) CHECK(groupoid_meet(g, x, g.one) == x);
  }
  SUBCASE("horizontal sum: meet(a, b) = 0") {
    CHECK(groupoid_meet(horizontal_sum_groupoid(), 1, 2) == 0);
  }
  SUBCASE("L4 groupoid: meet(a, b) = a") {
    CHECK(groupoid_meet(l4_groupoid(), 1, 2) == 1);
  }
  SUBCASE("meet and join realize glb/lub of the groupoid order") {
    for (const auto& g : named_groupoids()) {
      auto ord = groupoid_order(g);
      auto lat = lattice_of(ord);
      REQUIRE(lat.has_value());
      for (Element a = 0; a < g.size; ++a)
        for (Element b = 0; b < g.size; ++b) {
          CHECK(groupoid_meet(g, a, b) == lat->meet_at(a, b));
          CHECK(groupoid_join(g, a, b) == lat->join_at(a, b));
        }
    }
  }
}

TEST_CASE("structural predicates") {
  SUBCASE("Boolean 4 groupoid: idempotent, commutative, associative") {
    auto g = boolean4_groupoid();
    CHECK(is_idempotent(g));
    CHECK(is_commutative(g));
    CHECK(is_associative(g));
  }
  SUBCASE("L3 groupoid: commutative but not idempotent") {
    auto g = l3_groupoid();
    CHECK(is_commutative(g));
    CHECK_FALSE(is_idempotent(g)); // a.a = 0
  }
  SUBCASE("horizontal sum groupoid is not commutative") {
    auto g = horizontal_sum_groupoid();
    CHECK(g.dot_at(1, 2) == 2); // a.b = b
    CHECK(g.dot_at(2, 1) == 1); // b.a = a
    CHECK_FALSE(is_commutative(g));
  }
}

TEST_CASE("subuniverse closure") {
  SUBCASE("empty seed closes to {0, 1}") {
    CHECK(subuniverse_closure(l3_groupoid(), {}) == SubUniverse{0, 2});
    CHECK(subuniverse_closure(horizontal_sum_groupoid(), {}) == SubUniverse{0, 3});
  }
  SUBCASE("seed {a} in L3 closes to the whole carrier") {
    CHECK(subuniverse_closure(l3_groupoid(), {1}) == SubUniverse{0, 1, 2});
  }
  SUBCASE("seed {a} in the horizontal sum closes to {0, a, 1}") {
    CHECK(subuniverse_closure(horizontal_sum_groupoid(), {1}) == SubUniverse{0, 1, 3});
  }
  SUBCASE("closure is a fixpoint") {
    for (const auto& g : named_groupoids())
      for (Element e = 0; e < g.size; ++e) {
        auto once = subuniverse_closure(g, {e});
        CHECK(subuniverse_closure(g, once) == once);
      }
  }
}

TEST_CASE("blocks") {
  SUBCASE("commutative groupoids have a single block, the carrier") {
    for (const auto& g :
         {b2_groupoid(), l3_groupoid(), l4_groupoid(), boolean4_groupoid()}) {
      auto bs = blocks(g);
      REQUIRE(bs.size() == 1);
      CHECK(static_cast<int>(bs[0].size()) == g.size);
    }
  }
  SUBCASE("horizontal sum has exactly the two chain blocks") {
    auto bs = blocks(horizontal_sum_groupoid());
    REQUIRE(bs.size() == 2);
    CHECK(bs[0] == SubUniverse{0, 1, 3});
    CHECK(bs[1] == SubUniverse{0, 2, 3});
  }
  SUBCASE("blocks cover the carrier and restrict to commutative, associative "
          "effect groupoids") {
    for (const auto& g : named_groupoids()) {
      std::vector<char> covered(g.size, 0);
      for (const auto& block : blocks(g)) {
        for (Element e : block) covered[e] = 1;
        auto sub = restrict_groupoid(g, block);
        CHECK(is_commutative(sub));
        CHECK(is_associative(sub));
        CHECK(check_ng_axioms(sub).all_passed());
      }
      CHECK(std::count(covered.begin(), covered.end(), 1) == g.size);
    }
  }
}

TEST_CASE("NG5/NG6/NG7 hold pointwise on the named groupoids") {
  for (const auto& g : named_groupoids()) {
    auto d = [&](Element a, Element b) { return g.dot_at(a, b); };
    auto i = [&](Element a) { return g.inv_at(a); };
    for (Element x = 0; x < g.size; ++x)
      for (Element y = 0; y < g.size; ++y) {
        CHECK(d(x, y) == d(y, i(d(i(d(i(y), i(x))), i(x)))));
        CHECK(d(x, i(d(i(y), x))) == d(i(d(i(y), x)), x));
        CHECK(d(i(d(i(y), x)), x) == d(i(d(i(x), y)), y));
        for (Element z = 0; z < g.size; ++z)
          CHECK(d(i(d(i(d(x, i(y))), i(y))), z) ==
                i(d(i(d(d(x, z), i(d(y, z)))), i(d(y, z)))));
      }
  }
}

TEST_CASE("commutative implies associative on the named groupoids") {
  for (const auto& g : named_groupoids())
    if (is_commutative(g)) CHECK(is_associative(g));
}
