#include "lea/transform.hpp"

namespace lea {

EffectGroupoid groupoid_from_effect(const EffectAlgebra& e) {
  auto lat = lattice_structure(e);
  if (!lat)
    throw Error("the induced order is not a lattice; only lattice effect "
                "algebras translate to effect groupoids");
  const int n = e.size;
  EffectGroupoid g;
  g.size = n;
  g.dot.assign(static_cast<std::size_t>(n) * n, 0);
  g.inv = e.inv;
  g.zero = e.zero;
  g.one = e.one;
  g.names = e.names;
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      // x.y := ((x' ^ y) + y')', defined because x' ^ y <= y.
      const Element m = lat->meet_at(e.inv_at(x), y);
      auto sum = e.plus_at(m, e.inv_at(y));
      if (!sum)
        throw Error("(x'^y)+y' undefined at (" + e.display(x) + ", " +
                    e.display(y) + "); the algebra does not satisfy E1-E4");
      g.set_dot(x, y, e.inv_at(*sum));
    }
  return g;
}

EffectAlgebra effect_from_groupoid(const EffectGroupoid& g) {
  const int n = g.size;
  EffectAlgebra e;
  e.size = n;
  e.plus.assign(static_cast<std::size_t>(n) * n, std::nullopt);
  e.inv = g.inv;
  e.zero = g.zero;
  e.one = g.one;
  e.names = g.names;
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (g.dot_at(x, y) == g.zero)
        e.set_plus(x, y, g.inv_at(g.dot_at(g.inv_at(x), g.inv_at(y))));
  return e;
}

bool verify_round_trip_effect(const EffectAlgebra& e) {
  return same_tables(effect_from_groupoid(groupoid_from_effect(e)), e);
}

bool verify_round_trip_groupoid(const EffectGroupoid& g) {
  return same_tables(groupoid_from_effect(effect_from_groupoid(g)), g);
}

bool check_orthoalgebra_equivalence(const EffectAlgebra& e) {
  return is_orthoalgebra(e) == is_idempotent(groupoid_from_effect(e));
}

bool check_mv_equivalence(const EffectAlgebra& e) {
  return is_mv_effect(e) == is_commutative(groupoid_from_effect(e));
}

} // namespace lea
