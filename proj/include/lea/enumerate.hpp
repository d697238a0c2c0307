#ifndef LEA_ENUMERATE_HPP
#define LEA_ENUMERATE_HPP

#include <vector>

#include "lea/effect_groupoid.hpp"

namespace lea {

/// One catalog entry: a canonical-form groupoid plus the structural flags
/// recomputed for it.
struct CatalogEntry {
  EffectGroupoid groupoid;
  bool commutative = false;
  bool idempotent = false;
  bool associative = false;
  int block_count = 0;
};

/// Isomorphism-reduced catalog of effect groupoids up to a size bound.
/// entries[n] lists the size-n models (index 0 unused); every entry is in
/// canonical form and per-size lists are sorted, so two runs produce
/// identical catalogs.
struct Catalog {
  int size_bound = 0;
  std::vector<std::vector<CatalogEntry>> entries;

  const std::vector<CatalogEntry>& of_size(int n) const { return entries[n]; }
  int total() const {
    int t = 0;
    for (const auto& v : entries) t += static_cast<int>(v.size());
    return t;
  }
};

/// Relabels g by permutation pi (pi[old] = new index).
EffectGroupoid apply_permutation(const EffectGroupoid& g, const std::vector<int>& pi);

/// The lexicographically least relabeling of g among all permutations that
/// send zero to 0 and one to size-1 (ordering by dot table bytes, then inv).
/// Idempotent; two groupoids are isomorphic iff their canonical forms are
/// equal. Names are dropped.
EffectGroupoid canonical_form(const EffectGroupoid& g);

bool is_isomorphic(const EffectGroupoid& a, const EffectGroupoid& b);

/// Exhaustive, isomorphism-reduced enumeration of all effect groupoids of
/// every size <= bound. Backtracking over dot-table cells with constraint
/// propagation (NG0/NG2 pins, NG4-forced zeros, NG5-NG8 pruning on partial
/// tables). `jobs` > 1 parallelizes over involution choices; results are
/// merged and sorted, so the output does not depend on scheduling.
/// Throws Error if bound < 1 or bound > limits.max_enumeration_size.
Catalog enumerate_groupoids(int bound, const Limits& limits = default_limits(),
                            int jobs = 1);

} // namespace lea

#endif
