#ifndef LEA_ORDER_HPP
#define LEA_ORDER_HPP

#include <optional>
#include <vector>

#include "lea/core.hpp"

namespace lea {

/// A reflexive binary relation on 0..n-1 stored as a dense boolean table.
/// Producers (induced_order, groupoid_order) guarantee it is a bounded
/// partial order; verify_bounded_order re-checks that guarantee.
struct OrderRelation {
  int size = 0;
  std::vector<char> leq; // row-major, leq[a*size+b] != 0 iff a <= b

  bool leq_at(Element a, Element b) const {
    return leq[static_cast<std::size_t>(a) * size + b] != 0;
  }
  void set(Element a, Element b, bool v) {
    leq[static_cast<std::size_t>(a) * size + b] = v ? 1 : 0;
  }

  bool operator==(const OrderRelation&) const = default;
};

/// Meet and join tables of a lattice order.
struct LatticeTables {
  int size = 0;
  std::vector<Element> meet; // row-major
  std::vector<Element> join;

  Element meet_at(Element a, Element b) const {
    return meet[static_cast<std::size_t>(a) * size + b];
  }
  Element join_at(Element a, Element b) const {
    return join[static_cast<std::size_t>(a) * size + b];
  }
};

/// Returns the empty string if `ord` is a partial order with bottom `zero`
/// and top `one`, otherwise a one-line diagnostic naming the violation.
std::string verify_bounded_order(const OrderRelation& ord, Element zero, Element one);

/// Meet/join tables of `ord`, or nullopt as soon as one pair of elements has
/// no greatest lower bound or no least upper bound.
std::optional<LatticeTables> lattice_of(const OrderRelation& ord);

} // namespace lea

#endif
