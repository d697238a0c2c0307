#ifndef LEA_EFFECT_GROUPOID_HPP
#define LEA_EFFECT_GROUPOID_HPP

#include <optional>
#include <string>
#include <vector>

#include "lea/axiom_report.hpp"
#include "lea/core.hpp"
#include "lea/order.hpp"

namespace lea {

/// A finite total algebra (R; ., ', 0, 1). Unlike the effect algebra's
/// partial +, the dot table is everywhere defined.
struct EffectGroupoid {
  int size = 0;
  std::vector<Element> dot; // row-major, size*size, total
  std::vector<Element> inv;
  Element zero = 0;
  Element one = 0;
  std::optional<std::vector<std::string>> names;

  Element dot_at(Element a, Element b) const {
    return dot[static_cast<std::size_t>(a) * size + b];
  }
  void set_dot(Element a, Element b, Element v) {
    dot[static_cast<std::size_t>(a) * size + b] = v;
  }
  Element inv_at(Element a) const { return inv[static_cast<std::size_t>(a)]; }

  std::string display(Element a) const {
    if (names && a >= 0 && a < static_cast<int>(names->size())) return (*names)[a];
    return std::to_string(a);
  }

  bool operator==(const EffectGroupoid&) const = default;
};

bool same_tables(const EffectGroupoid& a, const EffectGroupoid& b);

/// A subset of the carrier containing 0 and 1 and closed under dot and inv,
/// kept as a sorted list of element indices.
using SubUniverse = std::vector<Element>;

/// Checks NG0-NG8. NG8's three conclusions are scanned jointly but reported
/// as separate checks NG8a/NG8b/NG8c. Witnesses are lexicographically first.
AxiomReport check_ng_axioms(const EffectGroupoid& g,
                            const Limits& limits = default_limits());

/// a <= b iff a.b' = 0. Throws Error if that relation is not a bounded poset
/// with antitone involution; unreachable for a validated groupoid.
OrderRelation groupoid_order(const EffectGroupoid& g);

/// a ^ b = (a'.b)'.b  — the lattice meet of groupoid_order.
Element groupoid_meet(const EffectGroupoid& g, Element a, Element b);

/// a v b = (a' ^ b')'.
Element groupoid_join(const EffectGroupoid& g, Element a, Element b);

bool is_idempotent(const EffectGroupoid& g);  // x.x = x
bool is_commutative(const EffectGroupoid& g); // x.y = y.x
bool is_associative(const EffectGroupoid& g); // (x.y).z = x.(y.z)

/// Least superset of seed ∪ {0, 1} closed under dot and inv.
SubUniverse subuniverse_closure(const EffectGroupoid& g,
                                const std::vector<Element>& seed);

/// All maximal subuniverses whose dot restriction is commutative, sorted
/// lexicographically. For a validated groupoid their union is the carrier
/// and each one is associative.
std::vector<SubUniverse> blocks(const EffectGroupoid& g);

/// The sub-effect groupoid on `universe` re-indexed to 0..|universe|-1
/// (universe must be dot- and inv-closed and contain zero and one).
EffectGroupoid restrict_groupoid(const EffectGroupoid& g, const SubUniverse& universe);

} // namespace lea

#endif
