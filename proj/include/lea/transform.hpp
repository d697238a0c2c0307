#ifndef LEA_TRANSFORM_HPP
#define LEA_TRANSFORM_HPP

#include "lea/effect_algebra.hpp"
#include "lea/effect_groupoid.hpp"

namespace lea {

/// x.y := ((x' ^ y) + y')' over the lattice structure of E. Total because
/// x' ^ y <= y. Involution, zero, one (and names) carry over unchanged.
/// Throws Error if E has no lattice structure, or — unreachable for a valid
/// lattice effect algebra — if + is undefined at a required point.
EffectGroupoid groupoid_from_effect(const EffectAlgebra& e);

/// x + y := (x'.y')' exactly when x.y = 0, undefined otherwise.
EffectAlgebra effect_from_groupoid(const EffectGroupoid& g);

/// effect_from_groupoid(groupoid_from_effect(E)) is table-identical to E.
bool verify_round_trip_effect(const EffectAlgebra& e);

/// groupoid_from_effect(effect_from_groupoid(G)) is table-identical to G.
bool verify_round_trip_groupoid(const EffectGroupoid& g);

/// is_orthoalgebra(E) agrees with is_idempotent of E's groupoid.
bool check_orthoalgebra_equivalence(const EffectAlgebra& e);

/// is_mv_effect(E) agrees with is_commutative of E's groupoid.
bool check_mv_equivalence(const EffectAlgebra& e);

} // namespace lea

#endif
