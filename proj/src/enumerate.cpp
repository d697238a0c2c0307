#include "lea/enumerate.hpp"

#include <algorithm>
#include <future>
#include <set>
#include <tuple>

namespace lea {

EffectGroupoid apply_permutation(const EffectGroupoid& g, const std::vector<int>& pi) {
  const int n = g.size;
  if (static_cast<int>(pi.size()) != n)
    throw Error("permutation has wrong length");
  EffectGroupoid h;
  h.size = n;
  h.dot.assign(static_cast<std::size_t>(n) * n, 0);
  h.inv.assign(n, 0);
  h.zero = pi[g.zero];
  h.one = pi[g.one];
  for (Element x = 0; x < n; ++x) {
    h.inv[pi[x]] = pi[g.inv_at(x)];
    for (Element y = 0; y < n; ++y)
      h.dot[static_cast<std::size_t>(pi[x]) * n + pi[y]] = pi[g.dot_at(x, y)];
  }
  if (g.names) {
    std::vector<std::string> names(n);
    for (Element x = 0; x < n; ++x) names[pi[x]] = (*g.names)[x];
    h.names = std::move(names);
  }
  return h;
}

EffectGroupoid canonical_form(const EffectGroupoid& g) {
  const int n = g.size;
  if (n > 1 && g.zero == g.one)
    throw Error("zero equals one in a structure of size > 1");
  std::vector<int> others;
  for (int i = 0; i < n; ++i)
    if (i != g.zero && i != g.one) others.push_back(i);
  std::vector<int> targets;
  for (int t = 1; t < n - 1; ++t) targets.push_back(t);

  std::vector<int> pi(n);
  EffectGroupoid best;
  bool have = false;
  do {
    pi[g.zero] = 0;
    pi[g.one] = n - 1;
    for (std::size_t k = 0; k < others.size(); ++k) pi[others[k]] = targets[k];
    EffectGroupoid h = apply_permutation(g, pi);
    h.names = std::nullopt;
    if (!have || std::tie(h.dot, h.inv) < std::tie(best.dot, best.inv)) {
      best = std::move(h);
      have = true;
    }
  } while (std::next_permutation(targets.begin(), targets.end()));
  return best;
}

bool is_isomorphic(const EffectGroupoid& a, const EffectGroupoid& b) {
  if (a.size != b.size) return false;
  return same_tables(canonical_form(a), canonical_form(b));
}

namespace {

/// Partially filled dot table during the search; -1 marks an undetermined
/// cell. `pending` holds freshly assigned cells whose NG4 consequences have
/// not been propagated yet.
struct SearchState {
  int n = 0;
  const std::vector<Element>* inv = nullptr;
  std::vector<int> dot;
  std::vector<std::pair<int, int>> pending;

  int at(int a, int b) const { return dot[static_cast<std::size_t>(a) * n + b]; }
  int iv(int a) const { return (*inv)[a]; }

  bool pin(int a, int b, int v) {
    int& cell = dot[static_cast<std::size_t>(a) * n + b];
    if (cell == v) return true;
    if (cell != -1) return false;
    cell = v;
    pending.emplace_back(a, b);
    return true;
  }
};

/// Pins the pair of cells to a common value; fails on a determined mismatch.
/// Returns true and sets `progress` when it narrowed anything.
bool equal_pin(SearchState& s, int r1, int c1, int r2, int c2, bool& progress) {
  const int v1 = s.at(r1, c1);
  const int v2 = s.at(r2, c2);
  if (v1 >= 0 && v2 >= 0) return v1 == v2;
  if (v1 >= 0) {
    if (!s.pin(r2, c2, v1)) return false;
    progress = true;
  } else if (v2 >= 0) {
    if (!s.pin(r1, c1, v2)) return false;
    progress = true;
  }
  return true;
}

/// NG4 consequences of each newly assigned cell: a.b = v forces
/// b'.v = 0 and v.b' = 0 (take y = a, x = b' in x.(y.x') = 0 = (y.x').x).
bool drain_ng4(SearchState& s) {
  while (!s.pending.empty()) {
    auto [a, b] = s.pending.back();
    s.pending.pop_back();
    const int v = s.at(a, b);
    if (!s.pin(s.iv(b), v, 0)) return false;
    if (!s.pin(v, s.iv(b), 0)) return false;
  }
  return true;
}

/// One pass of NG5-NG8 over all instances whose inner cells are determined,
/// pinning outer cells where only one side is still open.
bool scan_identities(SearchState& s, bool& progress) {
  const int n = s.n;

  // NG5: x.y = y.[(y'.x')'.x']'
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int inner = s.at(s.iv(y), s.iv(x));
      if (inner < 0) continue;
      const int u = s.at(s.iv(inner), s.iv(x));
      if (u < 0) continue;
      if (!equal_pin(s, x, y, y, s.iv(u), progress)) return false;
    }

  // NG6: x.(y'.x)' = (y'.x)'.x = (x'.y)'.y
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int i1 = s.at(s.iv(y), x);
      const int i2 = s.at(s.iv(x), y);
      if (i1 >= 0) {
        if (!equal_pin(s, x, s.iv(i1), s.iv(i1), x, progress)) return false;
        if (i2 >= 0 &&
            !equal_pin(s, s.iv(i1), x, s.iv(i2), y, progress))
          return false;
      }
    }

  // NG7: [(x.y')'.y']'.z = [((x.z).(y.z)')'.(y.z)']'
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int a1 = s.at(x, s.iv(y));
      if (a1 < 0) continue;
      const int a3 = s.at(s.iv(a1), s.iv(y));
      if (a3 < 0) continue;
      const int lhs_row = s.iv(a3);
      for (int z = 0; z < n; ++z) {
        const int p = s.at(x, z);
        const int q = s.at(y, z);
        if (p < 0 || q < 0) continue;
        const int b1 = s.at(p, s.iv(q));
        if (b1 < 0) continue;
        const int lhs = s.at(lhs_row, z);
        const int b3 = s.at(s.iv(b1), s.iv(q));
        if (lhs >= 0 && b3 >= 0) {
          if (lhs != s.iv(b3)) return false;
        } else if (lhs >= 0) {
          if (!s.pin(s.iv(b1), s.iv(q), s.iv(lhs))) return false;
          progress = true;
        } else if (b3 >= 0) {
          if (!s.pin(lhs_row, z, s.iv(b3))) return false;
          progress = true;
        }
      }
    }

  // NG8: x'.y' = 0 and (x.y)'.z' = 0 imply y'.z' = 0, x'.(y.z)' = 0 and
  // (x.y).z = x.(y.z).
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (s.at(s.iv(x), s.iv(y)) != 0) continue;
      const int xy = s.at(x, y);
      if (xy < 0) continue;
      for (int z = 0; z < n; ++z) {
        if (s.at(s.iv(xy), s.iv(z)) != 0) continue;
        const int before = s.at(s.iv(y), s.iv(z));
        if (before != 0) {
          if (before > 0) return false;
          if (!s.pin(s.iv(y), s.iv(z), 0)) return false;
          progress = true;
        }
        const int yz = s.at(y, z);
        if (yz < 0) continue;
        const int side = s.at(s.iv(x), s.iv(yz));
        if (side > 0) return false;
        if (side < 0) {
          if (!s.pin(s.iv(x), s.iv(yz), 0)) return false;
          progress = true;
        }
        if (!equal_pin(s, xy, z, x, yz, progress)) return false;
      }
    }

  return true;
}

bool propagate(SearchState& s) {
  while (true) {
    if (!drain_ng4(s)) return false;
    bool progress = false;
    if (!scan_identities(s, progress)) return false;
    if (!progress && s.pending.empty()) return true;
  }
}

using CanonKey = std::pair<std::vector<Element>, std::vector<Element>>;

void search_cells(const SearchState& state, std::set<CanonKey>& out) {
  const int n = state.n;
  int cell = -1;
  for (std::size_t i = 0; i < state.dot.size(); ++i)
    if (state.dot[i] < 0) {
      cell = static_cast<int>(i);
      break;
    }

  if (cell < 0) {
    EffectGroupoid g;
    g.size = n;
    g.dot = state.dot;
    g.inv = *state.inv;
    g.zero = 0;
    g.one = n - 1;
    // The incremental pruning is a filter, not a proof; re-check everything
    // on the completed table.
    if (!check_ng_axioms(g).all_passed()) return;
    EffectGroupoid canon = canonical_form(g);
    out.insert({std::move(canon.dot), std::move(canon.inv)});
    return;
  }

  const int row = cell / n;
  const int col = cell % n;
  for (int v = 0; v < n; ++v) {
    SearchState branch = state;
    if (!branch.pin(row, col, v)) continue;
    if (!propagate(branch)) continue;
    search_cells(branch, out);
  }
}

std::set<CanonKey> search_involution(int n, const std::vector<Element>& inv) {
  SearchState s;
  s.n = n;
  s.inv = &inv;
  s.dot.assign(static_cast<std::size_t>(n) * n, -1);
  const int zero = 0;
  const int one = n - 1;
  for (int i = 0; i < n; ++i) {
    if (!s.pin(one, i, i) || !s.pin(i, one, i)) return {};
    if (!s.pin(zero, i, 0) || !s.pin(i, zero, 0)) return {};
  }
  std::set<CanonKey> out;
  if (propagate(s)) search_cells(s, out);
  return out;
}

/// All involutions of 0..n-1 with inv[0] = n-1 (hence inv[n-1] = 0), in
/// lexicographic order.
void gen_involutions(int n, std::vector<Element>& inv,
                     std::vector<std::vector<Element>>& out) {
  int i = 0;
  while (i < n && inv[i] != -1) ++i;
  if (i == n) {
    out.push_back(inv);
    return;
  }
  for (int j = i; j < n; ++j) {
    if (inv[j] != -1 && j != i) continue;
    if (j == i) {
      inv[i] = i;
      gen_involutions(n, inv, out);
      inv[i] = -1;
    } else {
      inv[i] = j;
      inv[j] = i;
      gen_involutions(n, inv, out);
      inv[i] = inv[j] = -1;
    }
  }
}

std::vector<std::vector<Element>> involutions_for(int n) {
  std::vector<Element> inv(n, -1);
  if (n == 1) {
    return {{0}};
  }
  inv[0] = n - 1;
  inv[n - 1] = 0;
  std::vector<std::vector<Element>> out;
  gen_involutions(n, inv, out);
  return out;
}

} // namespace

Catalog enumerate_groupoids(int bound, const Limits& limits, int jobs) {
  if (bound < 1) throw Error("size bound must be at least 1");
  if (bound > limits.max_enumeration_size)
    throw Error("size bound " + std::to_string(bound) +
                " exceeds the enumeration cap " +
                std::to_string(limits.max_enumeration_size));

  Catalog catalog;
  catalog.size_bound = bound;
  catalog.entries.resize(bound + 1);

  for (int n = 1; n <= bound; ++n) {
    const auto involutions = involutions_for(n);
    std::set<CanonKey> keys;
    if (jobs <= 1 || involutions.size() <= 1) {
      for (const auto& inv : involutions)
        keys.merge(search_involution(n, inv));
    } else {
      std::vector<std::future<std::set<CanonKey>>> futures;
      for (const auto& inv : involutions)
        futures.push_back(std::async(std::launch::async,
                                     [n, &inv] { return search_involution(n, inv); }));
      for (auto& f : futures) keys.merge(f.get());
    }

    for (const auto& [dot, inv] : keys) {
      CatalogEntry entry;
      entry.groupoid.size = n;
      entry.groupoid.dot = dot;
      entry.groupoid.inv = inv;
      entry.groupoid.zero = 0;
      entry.groupoid.one = n - 1;
      entry.commutative = is_commutative(entry.groupoid);
      entry.idempotent = is_idempotent(entry.groupoid);
      entry.associative = is_associative(entry.groupoid);
      entry.block_count = static_cast<int>(blocks(entry.groupoid).size());
      catalog.entries[n].push_back(std::move(entry));
    }
  }
  return catalog;
}

} // namespace lea
