#include "lea/effect_groupoid.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace lea {

namespace {

std::string structural_problem(const EffectGroupoid& g, const Limits& limits) {
  const int n = g.size;
  if (n < 1) return "size must be at least 1";
  if (n > limits.max_structure_size)
    return "size " + std::to_string(n) + " exceeds the configured maximum " +
           std::to_string(limits.max_structure_size);
  if (static_cast<int>(g.inv.size()) != n) return "inv has wrong length";
  if (g.dot.size() != static_cast<std::size_t>(n) * n)
    return "dot table has wrong dimensions";
  if (g.zero < 0 || g.zero >= n) return "zero out of range";
  if (g.one < 0 || g.one >= n) return "one out of range";
  for (Element a = 0; a < n; ++a)
    if (g.inv[a] < 0 || g.inv[a] >= n)
      return "inv entry out of range at " + std::to_string(a);
  for (std::size_t i = 0; i < g.dot.size(); ++i)
    if (g.dot[i] < 0 || g.dot[i] >= n)
      return "table entry out of range at cell " + std::to_string(i);
  if (g.names && static_cast<int>(g.names->size()) != n)
    return "names list has wrong length";
  return {};
}

} // namespace

bool same_tables(const EffectGroupoid& a, const EffectGroupoid& b) {
  return a.size == b.size && a.dot == b.dot && a.inv == b.inv &&
         a.zero == b.zero && a.one == b.one;
}

AxiomReport check_ng_axioms(const EffectGroupoid& g, const Limits& limits) {
  AxiomReport report;
  if (auto problem = structural_problem(g, limits); !problem.empty()) {
    report.structural_ok = false;
    report.structural_error = problem;
    return report;
  }
  const int n = g.size;
  const auto dot = [&](Element a, Element b) { return g.dot_at(a, b); };
  const auto inv = [&](Element a) { return g.inv_at(a); };

  AxiomCheck ng0{"NG0"};
  for (Element x = 0; x < n && ng0.passed; ++x) {
    if (dot(g.one, x) != x)
      ng0 = {"NG0", false, {x}, "1." + g.display(x) + " != " + g.display(x)};
    else if (dot(x, g.one) != x)
      ng0 = {"NG0", false, {x}, g.display(x) + ".1 != " + g.display(x)};
  }
  report.checks.push_back(ng0);

  AxiomCheck ng1{"NG1"};
  for (Element x = 0; x < n && ng1.passed; ++x)
    if (inv(inv(x)) != x)
      ng1 = {"NG1", false, {x}, g.display(x) + "'' != " + g.display(x)};
  report.checks.push_back(ng1);

  AxiomCheck ng2{"NG2"};
  for (Element x = 0; x < n && ng2.passed; ++x) {
    if (dot(x, g.zero) != g.zero)
      ng2 = {"NG2", false, {x}, g.display(x) + ".0 != 0"};
    else if (dot(g.zero, x) != g.zero)
      ng2 = {"NG2", false, {x}, "0." + g.display(x) + " != 0"};
  }
  report.checks.push_back(ng2);

  AxiomCheck ng3{"NG3"};
  if (inv(g.zero) != g.one) ng3 = {"NG3", false, {g.zero}, "0' != 1"};
  report.checks.push_back(ng3);

  // NG4: x.(y.x') = 0 = (y.x').x
  AxiomCheck ng4{"NG4"};
  for (Element x = 0; x < n && ng4.passed; ++x)
    for (Element y = 0; y < n && ng4.passed; ++y) {
      const Element c = dot(y, inv(x));
      if (dot(x, c) != g.zero)
        ng4 = {"NG4", false, {x, y}, "x.(y.x') != 0"};
      else if (dot(c, x) != g.zero)
        ng4 = {"NG4", false, {x, y}, "(y.x').x != 0"};
    }
  report.checks.push_back(ng4);

  // NG5: x.y = y.[(y'.x')'.x']'
  AxiomCheck ng5{"NG5"};
  for (Element x = 0; x < n && ng5.passed; ++x)
    for (Element y = 0; y < n && ng5.passed; ++y) {
      const Element t = inv(dot(inv(y), inv(x)));
      const Element rhs = dot(y, inv(dot(t, inv(x))));
      if (dot(x, y) != rhs)
        ng5 = {"NG5", false, {x, y}, "x.y != y.[(y'.x')'.x']'"};
    }
  report.checks.push_back(ng5);

  // NG6: x.(y'.x)' = (y'.x)'.x = (x'.y)'.y
  AxiomCheck ng6{"NG6"};
  for (Element x = 0; x < n && ng6.passed; ++x)
    for (Element y = 0; y < n && ng6.passed; ++y) {
      const Element p = inv(dot(inv(y), x));
      const Element q = inv(dot(inv(x), y));
      if (dot(x, p) != dot(p, x))
        ng6 = {"NG6", false, {x, y}, "x.(y'.x)' != (y'.x)'.x"};
      else if (dot(p, x) != dot(q, y))
        ng6 = {"NG6", false, {x, y}, "(y'.x)'.x != (x'.y)'.y"};
    }
  report.checks.push_back(ng6);

  // NG7: [(x.y')'.y']'.z = [((x.z).(y.z)')'.(y.z)']'
  AxiomCheck ng7{"NG7"};
  for (Element x = 0; x < n && ng7.passed; ++x)
    for (Element y = 0; y < n && ng7.passed; ++y) {
      const Element lhs_base = inv(dot(inv(dot(x, inv(y))), inv(y)));
      for (Element z = 0; z < n && ng7.passed; ++z) {
        const Element p = dot(x, z);
        const Element q = dot(y, z);
        const Element rhs = inv(dot(inv(dot(p, inv(q))), inv(q)));
        if (dot(lhs_base, z) != rhs)
          ng7 = {"NG7", false, {x, y, z},
                 "[(x.y')'.y']'.z != [((x.z).(y.z)')'.(y.z)']'"};
      }
    }
  report.checks.push_back(ng7);

  // NG8: x'.y' = 0 and (x.y)'.z' = 0 imply three conclusions; they are
  // scanned jointly but reported as separate checks.
  AxiomCheck ng8a{"NG8a"}, ng8b{"NG8b"}, ng8c{"NG8c"};
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      if (dot(inv(x), inv(y)) != g.zero) continue;
      const Element xy = dot(x, y);
      for (Element z = 0; z < n; ++z) {
        if (dot(inv(xy), inv(z)) != g.zero) continue;
        if (ng8a.passed && dot(inv(y), inv(z)) != g.zero)
          ng8a = {"NG8a", false, {x, y, z}, "y'.z' != 0"};
        const Element yz = dot(y, z);
        if (ng8b.passed && dot(inv(x), inv(yz)) != g.zero)
          ng8b = {"NG8b", false, {x, y, z}, "x'.(y.z)' != 0"};
        if (ng8c.passed && dot(xy, z) != dot(x, yz))
          ng8c = {"NG8c", false, {x, y, z}, "(x.y).z != x.(y.z)"};
      }
    }
  report.checks.push_back(ng8a);
  report.checks.push_back(ng8b);
  report.checks.push_back(ng8c);

  return report;
}

OrderRelation groupoid_order(const EffectGroupoid& g) {
  const int n = g.size;
  OrderRelation ord;
  ord.size = n;
  ord.leq.assign(static_cast<std::size_t>(n) * n, 0);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      ord.set(a, b, g.dot_at(a, g.inv_at(b)) == g.zero);
  if (auto problem = verify_bounded_order(ord, g.zero, g.one); !problem.empty())
    throw Error("groupoid order is not a bounded poset (" + problem +
                "); the groupoid does not satisfy NG0-NG8");
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (ord.leq_at(a, b) && !ord.leq_at(g.inv_at(b), g.inv_at(a)))
        throw Error("involution is not antitone at (" + g.display(a) + ", " +
                    g.display(b) + ")");
  return ord;
}

Element groupoid_meet(const EffectGroupoid& g, Element a, Element b) {
  return g.dot_at(g.inv_at(g.dot_at(g.inv_at(a), b)), b);
}

Element groupoid_join(const EffectGroupoid& g, Element a, Element b) {
  return g.inv_at(groupoid_meet(g, g.inv_at(a), g.inv_at(b)));
}

bool is_idempotent(const EffectGroupoid& g) {
  for (Element x = 0; x < g.size; ++x)
    if (g.dot_at(x, x) != x) return false;
  return true;
}

bool is_commutative(const EffectGroupoid& g) {
  for (Element x = 0; x < g.size; ++x)
    for (Element y = x + 1; y < g.size; ++y)
      if (g.dot_at(x, y) != g.dot_at(y, x)) return false;
  return true;
}

bool is_associative(const EffectGroupoid& g) {
  for (Element x = 0; x < g.size; ++x)
    for (Element y = 0; y < g.size; ++y)
      for (Element z = 0; z < g.size; ++z)
        if (g.dot_at(g.dot_at(x, y), z) != g.dot_at(x, g.dot_at(y, z)))
          return false;
  return true;
}

SubUniverse subuniverse_closure(const EffectGroupoid& g,
                                const std::vector<Element>& seed) {
  std::vector<char> in(g.size, 0);
  in[g.zero] = in[g.one] = 1;
  for (Element s : seed) {
    if (s < 0 || s >= g.size) throw Error("seed element out of range");
    in[s] = 1;
  }
  bool grew = true;
  while (grew) {
    grew = false;
    for (Element a = 0; a < g.size; ++a) {
      if (!in[a]) continue;
      if (!in[g.inv_at(a)]) {
        in[g.inv_at(a)] = 1;
        grew = true;
      }
      for (Element b = 0; b < g.size; ++b) {
        if (!in[b]) continue;
        const Element c = g.dot_at(a, b);
        if (!in[c]) {
          in[c] = 1;
          grew = true;
        }
      }
    }
  }
  SubUniverse out;
  for (Element a = 0; a < g.size; ++a)
    if (in[a]) out.push_back(a);
  return out;
}

namespace {

bool commutes_on(const EffectGroupoid& g, const SubUniverse& u) {
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = i + 1; j < u.size(); ++j)
      if (g.dot_at(u[i], u[j]) != g.dot_at(u[j], u[i])) return false;
  return true;
}

/// Exhaustive seed-growing: from a commutative closed set, branch on every
/// element whose addition keeps the closure commutative. Visited sets are
/// memoized so each closed set is expanded once.
void grow(const EffectGroupoid& g, const SubUniverse& current,
          std::set<SubUniverse>& visited, std::set<SubUniverse>& maximal_pool) {
  if (!visited.insert(current).second) return;
  bool extended = false;
  for (Element e = 0; e < g.size; ++e) {
    if (std::binary_search(current.begin(), current.end(), e)) continue;
    SubUniverse seed = current;
    seed.push_back(e);
    SubUniverse next = subuniverse_closure(g, seed);
    if (!commutes_on(g, next)) continue;
    extended = true;
    grow(g, next, visited, maximal_pool);
  }
  if (!extended) maximal_pool.insert(current);
}

} // namespace

std::vector<SubUniverse> blocks(const EffectGroupoid& g) {
  std::set<SubUniverse> visited, maximal_pool;
  for (Element e = 0; e < g.size; ++e) {
    SubUniverse start = subuniverse_closure(g, {e});
    if (!commutes_on(g, start)) continue;
    grow(g, start, visited, maximal_pool);
  }
  // The pool holds sets with no commutative extension; prune proper subsets.
  std::vector<SubUniverse> out;
  for (const auto& candidate : maximal_pool) {
    bool dominated = false;
    for (const auto& other : maximal_pool) {
      if (other.size() <= candidate.size()) continue;
      if (std::includes(other.begin(), other.end(), candidate.begin(),
                        candidate.end())) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(candidate);
  }
  std::sort(out.begin(), out.end());
  return out;
}

EffectGroupoid restrict_groupoid(const EffectGroupoid& g, const SubUniverse& universe) {
  const int m = static_cast<int>(universe.size());
  std::vector<int> position(g.size, -1);
  for (int i = 0; i < m; ++i) position[universe[i]] = i;
  if (position[g.zero] < 0 || position[g.one] < 0)
    throw Error("universe must contain zero and one");

  EffectGroupoid sub;
  sub.size = m;
  sub.dot.assign(static_cast<std::size_t>(m) * m, 0);
  sub.inv.assign(m, 0);
  sub.zero = position[g.zero];
  sub.one = position[g.one];
  for (int i = 0; i < m; ++i) {
    if (position[g.inv_at(universe[i])] < 0)
      throw Error("universe is not closed under inv");
    sub.inv[i] = position[g.inv_at(universe[i])];
    for (int j = 0; j < m; ++j) {
      const Element c = g.dot_at(universe[i], universe[j]);
      if (position[c] < 0) throw Error("universe is not closed under dot");
      sub.set_dot(i, j, position[c]);
    }
  }
  if (g.names) {
    std::vector<std::string> names(m);
    for (int i = 0; i < m; ++i) names[i] = (*g.names)[universe[i]];
    sub.names = std::move(names);
  }
  return sub;
}

} // namespace lea
