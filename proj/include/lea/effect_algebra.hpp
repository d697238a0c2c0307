#ifndef LEA_EFFECT_ALGEBRA_HPP
#define LEA_EFFECT_ALGEBRA_HPP

#include <optional>
#include <string>
#include <vector>

#include "lea/axiom_report.hpp"
#include "lea/core.hpp"
#include "lea/order.hpp"

namespace lea {

/// A finite partial algebra (E; +, ', 0, 1). The binary table is partial:
/// an absent entry means "+ is undefined there", which is distinct from any
/// element value (a failed axiom can never masquerade as undefinedness).
///
/// Nothing about the tables is assumed at construction time; run
/// check_effect_axioms to validate E1-E4 before calling the derived
/// operations. All values are immutable after validation and every operation
/// on them is pure, so instances can be shared across threads freely.
struct EffectAlgebra {
  int size = 0;
  std::vector<std::optional<Element>> plus; // row-major, size*size
  std::vector<Element> inv;
  Element zero = 0;
  Element one = 0;
  std::optional<std::vector<std::string>> names;

  std::optional<Element> plus_at(Element a, Element b) const {
    return plus[static_cast<std::size_t>(a) * size + b];
  }
  void set_plus(Element a, Element b, std::optional<Element> v) {
    plus[static_cast<std::size_t>(a) * size + b] = v;
  }
  Element inv_at(Element a) const { return inv[static_cast<std::size_t>(a)]; }

  std::string display(Element a) const {
    if (names && a >= 0 && a < static_cast<int>(names->size())) return (*names)[a];
    return std::to_string(a);
  }

  bool operator==(const EffectAlgebra&) const = default;
};

/// Table identity: same size, same partiality pattern, same values, same
/// involution and bounds. Names are display metadata and do not count.
bool same_tables(const EffectAlgebra& a, const EffectAlgebra& b);

/// Checks E1 (commutativity), E2 (one-directional associativity, exactly as
/// the schema is quantified), E3 (existence and uniqueness of complements),
/// E3-inv (the supplied involution is the complement map) and E4 (1 is
/// maximal). Each failed axiom carries its lexicographically first witness.
AxiomReport check_effect_axioms(const EffectAlgebra& e,
                                const Limits& limits = default_limits());

/// The induced order: a <= b iff some c has a+c = b.
/// Throws Error if the result is not a bounded poset or the involution is
/// not antitone; unreachable for an algebra that passed check_effect_axioms.
OrderRelation induced_order(const EffectAlgebra& e);

/// b - a, i.e. (a + b')': defined exactly when a + b' is. For a <= b this is
/// the unique c with a + c = b.
std::optional<Element> ominus(const EffectAlgebra& e, Element a, Element b);

/// Meet/join tables of the induced order, or nullopt if some pair lacks a
/// greatest lower or least upper bound (then E is not a lattice effect
/// algebra).
std::optional<LatticeTables> lattice_structure(const EffectAlgebra& e);

/// For all a,b,c with a+c and b+c defined: (a^b)+c is defined and equals
/// (a+c)^(b+c). Requires a lattice effect algebra.
bool check_meet_translation(const EffectAlgebra& e);

/// x+x defined implies x = 0.
bool is_orthoalgebra(const EffectAlgebra& e);

/// (x ^ y') + y = (y ^ x') + x for all pairs. Requires a lattice effect
/// algebra (both sides are then always defined since x ^ y' <= y').
bool is_mv_effect(const EffectAlgebra& e);

} // namespace lea

#endif
