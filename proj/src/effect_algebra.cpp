#include "lea/effect_algebra.hpp"

#include <string>

namespace lea {

namespace {

std::string structural_problem(const EffectAlgebra& e, const Limits& limits) {
  const int n = e.size;
  if (n < 1) return "size must be at least 1";
  if (n > limits.max_structure_size)
    return "size " + std::to_string(n) + " exceeds the configured maximum " +
           std::to_string(limits.max_structure_size);
  if (static_cast<int>(e.inv.size()) != n) return "inv has wrong length";
  if (e.plus.size() != static_cast<std::size_t>(n) * n)
    return "plus table has wrong dimensions";
  if (e.zero < 0 || e.zero >= n) return "zero out of range";
  if (e.one < 0 || e.one >= n) return "one out of range";
  for (Element a = 0; a < n; ++a)
    if (e.inv[a] < 0 || e.inv[a] >= n)
      return "inv entry out of range at " + std::to_string(a);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      auto v = e.plus_at(a, b);
      if (v && (*v < 0 || *v >= n))
        return "table entry out of range at (" + std::to_string(a) + ", " +
               std::to_string(b) + ")";
    }
  if (e.names && static_cast<int>(e.names->size()) != n)
    return "names list has wrong length";
  return {};
}

} // namespace

bool same_tables(const EffectAlgebra& a, const EffectAlgebra& b) {
  return a.size == b.size && a.plus == b.plus && a.inv == b.inv &&
         a.zero == b.zero && a.one == b.one;
}

AxiomReport check_effect_axioms(const EffectAlgebra& e, const Limits& limits) {
  AxiomReport report;
  if (auto problem = structural_problem(e, limits); !problem.empty()) {
    report.structural_ok = false;
    report.structural_error = problem;
    return report;
  }
  const int n = e.size;

  // E1: if x+y exists, so does y+x and they agree.
  AxiomCheck e1{"E1"};
  for (Element x = 0; x < n && e1.passed; ++x)
    for (Element y = 0; y < n && e1.passed; ++y) {
      auto xy = e.plus_at(x, y);
      if (!xy) continue;
      auto yx = e.plus_at(y, x);
      if (!yx) {
        e1 = {"E1", false, {x, y},
              e.display(y) + "+" + e.display(x) + " is undefined"};
      } else if (*yx != *xy) {
        e1 = {"E1", false, {x, y},
              e.display(x) + "+" + e.display(y) + " != " + e.display(y) + "+" +
                  e.display(x)};
      }
    }
  report.checks.push_back(e1);

  // E2, one direction only, exactly as the schema is quantified: whenever
  // x+y and (x+y)+z exist, y+z and x+(y+z) must exist and the two sums agree.
  AxiomCheck e2{"E2"};
  for (Element x = 0; x < n && e2.passed; ++x)
    for (Element y = 0; y < n && e2.passed; ++y) {
      auto xy = e.plus_at(x, y);
      if (!xy) continue;
      for (Element z = 0; z < n && e2.passed; ++z) {
        auto xyz = e.plus_at(*xy, z);
        if (!xyz) continue;
        auto yz = e.plus_at(y, z);
        if (!yz) {
          e2 = {"E2", false, {x, y, z},
                e.display(y) + "+" + e.display(z) + " is undefined"};
          break;
        }
        auto x_yz = e.plus_at(x, *yz);
        if (!x_yz) {
          e2 = {"E2", false, {x, y, z},
                e.display(x) + "+(" + e.display(y) + "+" + e.display(z) +
                    ") is undefined"};
        } else if (*x_yz != *xyz) {
          e2 = {"E2", false, {x, y, z}, "the two associations differ"};
        }
      }
    }
  report.checks.push_back(e2);

  // E3: every x has exactly one complement (some y with x+y = 1).
  AxiomCheck e3{"E3"};
  for (Element x = 0; x < n && e3.passed; ++x) {
    int count = 0;
    for (Element y = 0; y < n; ++y) {
      auto v = e.plus_at(x, y);
      if (v && *v == e.one) ++count;
    }
    if (count != 1)
      e3 = {"E3", false, {x},
            count == 0 ? "no complement" : "complement is not unique"};
  }
  report.checks.push_back(e3);

  // E3-inv: the supplied involution is that complement map.
  AxiomCheck e3inv{"E3-inv"};
  for (Element x = 0; x < n && e3inv.passed; ++x) {
    auto v = e.plus_at(x, e.inv_at(x));
    if (!v || *v != e.one)
      e3inv = {"E3-inv", false, {x},
               e.display(x) + "+" + e.display(e.inv_at(x)) + " is not one"};
  }
  report.checks.push_back(e3inv);

  // E4: x+1 exists only for x = 0.
  AxiomCheck e4{"E4"};
  for (Element x = 0; x < n && e4.passed; ++x)
    if (e.plus_at(x, e.one) && x != e.zero)
      e4 = {"E4", false, {x},
            e.display(x) + "+1 is defined but " + e.display(x) + " != 0"};
  report.checks.push_back(e4);

  return report;
}

OrderRelation induced_order(const EffectAlgebra& e) {
  const int n = e.size;
  OrderRelation ord;
  ord.size = n;
  ord.leq.assign(static_cast<std::size_t>(n) * n, 0);
  for (Element a = 0; a < n; ++a)
    for (Element c = 0; c < n; ++c) {
      auto v = e.plus_at(a, c);
      if (v) ord.set(a, *v, true);
    }
  if (auto problem = verify_bounded_order(ord, e.zero, e.one); !problem.empty())
    throw Error("induced order is not a bounded poset (" + problem +
                "); the algebra does not satisfy E1-E4");
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (ord.leq_at(a, b) && !ord.leq_at(e.inv_at(b), e.inv_at(a)))
        throw Error("involution is not antitone at (" + e.display(a) + ", " +
                    e.display(b) + ")");
  return ord;
}

std::optional<Element> ominus(const EffectAlgebra& e, Element a, Element b) {
  auto v = e.plus_at(a, e.inv_at(b));
  if (!v) return std::nullopt;
  return e.inv_at(*v);
}

std::optional<LatticeTables> lattice_structure(const EffectAlgebra& e) {
  return lattice_of(induced_order(e));
}

bool check_meet_translation(const EffectAlgebra& e) {
  auto lat = lattice_structure(e);
  if (!lat) throw Error("not a lattice effect algebra");
  const int n = e.size;
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c) {
        auto ac = e.plus_at(a, c);
        auto bc = e.plus_at(b, c);
        if (!ac || !bc) continue;
        auto mc = e.plus_at(lat->meet_at(a, b), c);
        if (!mc || *mc != lat->meet_at(*ac, *bc)) return false;
      }
  return true;
}

bool is_orthoalgebra(const EffectAlgebra& e) {
  for (Element x = 0; x < e.size; ++x)
    if (e.plus_at(x, x) && x != e.zero) return false;
  return true;
}

bool is_mv_effect(const EffectAlgebra& e) {
  auto lat = lattice_structure(e);
  if (!lat) throw Error("not a lattice effect algebra");
  const int n = e.size;
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      auto lhs = e.plus_at(lat->meet_at(x, e.inv_at(y)), y);
      auto rhs = e.plus_at(lat->meet_at(y, e.inv_at(x)), x);
      if (!lhs || !rhs)
        throw Error("(x^y')+y undefined at (" + e.display(x) + ", " +
                    e.display(y) + "); the algebra does not satisfy E1-E4");
      if (*lhs != *rhs) return false;
    }
  return true;
}

} // namespace lea
