#include "lea/order.hpp"

#include <string>

namespace lea {

std::string verify_bounded_order(const OrderRelation& ord, Element zero, Element one) {
  const int n = ord.size;
  for (Element a = 0; a < n; ++a)
    if (!ord.leq_at(a, a))
      return "not reflexive at " + std::to_string(a);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (a != b && ord.leq_at(a, b) && ord.leq_at(b, a))
        return "antisymmetry fails at (" + std::to_string(a) + ", " +
               std::to_string(b) + ")";
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      if (!ord.leq_at(a, b)) continue;
      for (Element c = 0; c < n; ++c)
        if (ord.leq_at(b, c) && !ord.leq_at(a, c))
          return "transitivity fails at (" + std::to_string(a) + ", " +
                 std::to_string(b) + ", " + std::to_string(c) + ")";
    }
  for (Element a = 0; a < n; ++a) {
    if (!ord.leq_at(zero, a))
      return "zero is not a bottom (zero <= " + std::to_string(a) + " fails)";
    if (!ord.leq_at(a, one))
      return "one is not a top (" + std::to_string(a) + " <= one fails)";
  }
  return {};
}

std::optional<LatticeTables> lattice_of(const OrderRelation& ord) {
  const int n = ord.size;
  LatticeTables t;
  t.size = n;
  t.meet.assign(static_cast<std::size_t>(n) * n, 0);
  t.join.assign(static_cast<std::size_t>(n) * n, 0);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      Element glb = -1;
      for (Element c = 0; c < n; ++c) {
        if (!ord.leq_at(c, a) || !ord.leq_at(c, b)) continue;
        if (glb == -1 || ord.leq_at(glb, c)) glb = c;
      }
      // glb must dominate every common lower bound, not just the ones
      // scanned before it.
      if (glb == -1) return std::nullopt;
      for (Element c = 0; c < n; ++c)
        if (ord.leq_at(c, a) && ord.leq_at(c, b) && !ord.leq_at(c, glb))
          return std::nullopt;
      t.meet[static_cast<std::size_t>(a) * n + b] = glb;

      Element lub = -1;
      for (Element c = 0; c < n; ++c) {
        if (!ord.leq_at(a, c) || !ord.leq_at(b, c)) continue;
        if (lub == -1 || ord.leq_at(c, lub)) lub = c;
      }
      if (lub == -1) return std::nullopt;
      for (Element c = 0; c < n; ++c)
        if (ord.leq_at(a, c) && ord.leq_at(b, c) && !ord.leq_at(lub, c))
          return std::nullopt;
      t.join[static_cast<std::size_t>(a) * n + b] = lub;
    }
  return t;
}

} // namespace lea
