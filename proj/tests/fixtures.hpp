#ifndef LEA_TESTS_FIXTURES_HPP
#define LEA_TESTS_FIXTURES_HPP

#include <optional>
#include <string>
#include <vector>

#include "lea/effect_algebra.hpp"
#include "lea/effect_groupoid.hpp"

namespace lea::testing {

/// Builds an effect algebra from a flat row-major table; -1 marks an
/// undefined sum. Tables here are frozen test data, written out in full so a
/// broken builder cannot silently repair them.
inline EffectAlgebra make_effect(int n, Element zero, Element one,
                                 std::vector<Element> inv, std::vector<int> cells,
                                 std::optional<std::vector<std::string>> names = {}) {
  EffectAlgebra e;
  e.size = n;
  e.plus.assign(static_cast<std::size_t>(n) * n, std::nullopt);
  e.inv = std::move(inv);
  e.zero = zero;
  e.one = one;
  e.names = std::move(names);
  for (int i = 0; i < n * n; ++i)
    if (cells[i] >= 0) e.plus[i] = cells[i];
  return e;
}

inline EffectGroupoid make_groupoid(int n, Element zero, Element one,
                                    std::vector<Element> inv, std::vector<Element> cells,
                                    std::optional<std::vector<std::string>> names = {}) {
  EffectGroupoid g;
  g.size = n;
  g.dot = std::move(cells);
  g.inv = std::move(inv);
  g.zero = zero;
  g.one = one;
  g.names = std::move(names);
  return g;
}

/// B2, the two-element chain 0 < 1.
inline EffectAlgebra b2() {
  return make_effect(2, 0, 1, {1, 0},
                     {0, 1,
                      1, -1},
                     {{"0", "1"}});
}

/// The three-element chain 0 < a < 1 with a' = a and a+a = 1.
inline EffectAlgebra l3() {
  return make_effect(3, 0, 2, {2, 1, 0},
                     {0, 1, 2,
                      1, 2, -1,
                      2, -1, -1},
                     {{"0", "a", "1"}});
}

/// The four-element chain 0 < a < b < 1 with a' = b and a+a = b.
inline EffectAlgebra l4() {
  return make_effect(4, 0, 3, {3, 2, 1, 0},
                     {0, 1, 2, 3,
                      1, 2, 3, -1,
                      2, 3, -1, -1,
                      3, -1, -1, -1},
                     {{"0", "a", "b", "1"}});
}

/// The four-element Boolean algebra {0, a, b = a', 1}; a+a is undefined.
inline EffectAlgebra boolean4() {
  return make_effect(4, 0, 3, {3, 2, 1, 0},
                     {0, 1, 2, 3,
                      1, -1, 3, -1,
                      2, 3, -1, -1,
                      3, -1, -1, -1},
                     {{"0", "a", "b", "1"}});
}

/// Horizontal sum of two three-element chains: {0, a, b, 1} with a' = a,
/// b' = b, a+a = b+b = 1 and a+b undefined. The smallest source of a
/// noncommutative groupoid.
inline EffectAlgebra horizontal_sum() {
  return make_effect(4, 0, 3, {3, 1, 2, 0},
                     {0, 1, 2, 3,
                      1, 3, -1, -1,
                      2, -1, 3, -1,
                      3, -1, -1, -1},
                     {{"0", "a", "b", "1"}});
}

/// The hexagon 0 < {a, b} < {c, d} < 1 with a' = d, b' = c: a valid effect
/// algebra whose induced order is not a lattice (a and b have two minimal
/// upper bounds c = a+a = b+b and d = a+b).
inline EffectAlgebra hexagon() {
  return make_effect(6, 0, 5, {5, 4, 3, 2, 1, 0},
                     {0, 1, 2, 3, 4, 5,
                      1, 3, 4, -1, 5, -1,
                      2, 4, 3, 5, -1, -1,
                      3, -1, 5, -1, -1, -1,
                      4, 5, -1, -1, -1, -1,
                      5, -1, -1, -1, -1, -1},
                     {{"0", "a", "b", "c", "d", "1"}});
}

// Groupoid counterparts. The tables are the hand-evaluated images of the
// algebras above under x.y = ((x' ^ y) + y')'.

inline EffectGroupoid b2_groupoid() {
  return make_groupoid(2, 0, 1, {1, 0},
                       {0, 0,
                        0, 1},
                       {{"0", "1"}});
}

inline EffectGroupoid l3_groupoid() {
  return make_groupoid(3, 0, 2, {2, 1, 0},
                       {0, 0, 0,
                        0, 0, 1,
                        0, 1, 2},
                       {{"0", "a", "1"}});
}

inline EffectGroupoid l4_groupoid() {
  return make_groupoid(4, 0, 3, {3, 2, 1, 0},
                       {0, 0, 0, 0,
                        0, 0, 0, 1,
                        0, 0, 1, 2,
                        0, 1, 2, 3},
                       {{"0", "a", "b", "1"}});
}

inline EffectGroupoid boolean4_groupoid() {
  return make_groupoid(4, 0, 3, {3, 2, 1, 0},
                       {0, 0, 0, 0,
                        0, 1, 0, 1,
                        0, 0, 2, 2,
                        0, 1, 2, 3},
                       {{"0", "a", "b", "1"}});
}

inline EffectGroupoid horizontal_sum_groupoid() {
  return make_groupoid(4, 0, 3, {3, 1, 2, 0},
                       {0, 0, 0, 0,
                        0, 0, 2, 1,
                        0, 1, 0, 2,
                        0, 1, 2, 3},
                       {{"0", "a", "b", "1"}});
}

} // namespace lea::testing

#endif
