#include "lea/semantics.hpp"

#include <future>

namespace lea {

Element eval_formula(const EffectGroupoid& g, const Valuation& v, const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Bot:
      return g.zero;
    case Formula::Kind::Top:
      return g.one;
    case Formula::Kind::Neg:
      return g.inv_at(eval_formula(g, v, f.body()));
    case Formula::Kind::Prod:
      return g.dot_at(eval_formula(g, v, f.left()),
                      eval_formula(g, v, f.right()));
    case Formula::Kind::Var: {
      auto it = v.find(f.var_name());
      if (it == v.end())
        throw Error("unbound variable '" + f.var_name() + "'");
      return it->second;
    }
  }
  throw Error("unreachable formula kind");
}

namespace {

bool holds_in(const EffectGroupoid& g, const Valuation& v, const Sequent& s) {
  // a <= b iff a.b' = 0 in the groupoid order.
  const Element a = eval_formula(g, v, s.lhs);
  const Element b = eval_formula(g, v, s.rhs);
  return g.dot_at(a, g.inv_at(b)) == g.zero;
}

std::vector<std::string> sorted_vars(const Sequent& s) {
  std::set<std::string> vars;
  s.collect_vars(vars);
  return {vars.begin(), vars.end()};
}

/// Calls fn for every assignment of elements to vars, in lexicographic order
/// of the assignment tuple. Stops early when fn returns false.
template <typename Fn>
void for_each_valuation(const EffectGroupoid& g,
                        const std::vector<std::string>& vars, Fn&& fn) {
  std::vector<Element> tuple(vars.size(), 0);
  while (true) {
    Valuation v;
    for (std::size_t i = 0; i < vars.size(); ++i) v[vars[i]] = tuple[i];
    if (!fn(v)) return;
    int i = static_cast<int>(tuple.size()) - 1;
    while (i >= 0 && tuple[i] == g.size - 1) tuple[i--] = 0;
    if (i < 0) return;
    ++tuple[i];
  }
}

} // namespace

bool sequent_valid_in(const EffectGroupoid& g, const Sequent& s, const Limits& limits) {
  auto vars = sorted_vars(s);
  if (static_cast<int>(vars.size()) > limits.max_sequent_vars)
    throw Error("sequent has " + std::to_string(vars.size()) +
                " variables, more than the configured maximum " +
                std::to_string(limits.max_sequent_vars));
  bool valid = true;
  for_each_valuation(g, vars, [&](const Valuation& v) {
    if (!holds_in(g, v, s)) {
      valid = false;
      return false;
    }
    return true;
  });
  return valid;
}

std::optional<Countermodel> countermodel(const Sequent& s, const Catalog& catalog,
                                         const Limits& limits) {
  auto vars = sorted_vars(s);
  if (static_cast<int>(vars.size()) > limits.max_sequent_vars)
    throw Error("sequent has " + std::to_string(vars.size()) +
                " variables, more than the configured maximum " +
                std::to_string(limits.max_sequent_vars));
  for (int n = 1; n < static_cast<int>(catalog.entries.size()); ++n) {
    for (std::size_t idx = 0; idx < catalog.entries[n].size(); ++idx) {
      const EffectGroupoid& g = catalog.entries[n][idx].groupoid;
      std::optional<Valuation> found;
      for_each_valuation(g, vars, [&](const Valuation& v) {
        if (!holds_in(g, v, s)) {
          found = v;
          return false;
        }
        return true;
      });
      if (found)
        return Countermodel{g, *found, n, static_cast<int>(idx)};
    }
  }
  return std::nullopt;
}

SweepReport soundness_sweep(const std::vector<ProofNode>& proofs,
                            const Catalog& catalog, const RuleRegistry& rules,
                            const Limits& limits, int jobs) {
  for (std::size_t i = 0; i < proofs.size(); ++i) {
    auto check = check_proof(proofs[i], rules);
    if (!check.ok)
      throw Error("proof " + std::to_string(i) +
                  " does not pass check_proof (" + check.issues[0].message +
                  "); the sweep requires checked proofs");
  }

  SweepReport report;
  report.proofs = static_cast<int>(proofs.size());
  report.models = catalog.total();

  auto sweep_range = [&](std::size_t begin, std::size_t end) {
    SweepReport part;
    for (std::size_t i = begin; i < end; ++i)
      for (int n = 1; n < static_cast<int>(catalog.entries.size()); ++n)
        for (std::size_t idx = 0; idx < catalog.entries[n].size(); ++idx) {
          ++part.checks;
          const EffectGroupoid& g = catalog.entries[n][idx].groupoid;
          if (!sequent_valid_in(g, proofs[i].conclusion, limits))
            part.violations.push_back({static_cast<int>(i), n,
                                       static_cast<int>(idx),
                                       print_sequent(proofs[i].conclusion)});
        }
    return part;
  };

  if (jobs <= 1 || proofs.size() <= 1) {
    SweepReport part = sweep_range(0, proofs.size());
    report.checks = part.checks;
    report.violations = std::move(part.violations);
    return report;
  }

  const std::size_t workers = std::min<std::size_t>(jobs, proofs.size());
  std::vector<std::future<SweepReport>> futures;
  const std::size_t chunk = (proofs.size() + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(proofs.size(), begin + chunk);
    if (begin >= end) break;
    futures.push_back(std::async(std::launch::async, sweep_range, begin, end));
  }
  // Futures are joined in submission order, so aggregation is deterministic.
  for (auto& f : futures) {
    SweepReport part = f.get();
    report.checks += part.checks;
    report.violations.insert(report.violations.end(), part.violations.begin(),
                             part.violations.end());
  }
  return report;
}

bool rule_semantically_sound(const EffectGroupoid& g, const RuleScheme& scheme) {
  std::set<std::string> var_set;
  scheme.conclusion.collect_vars(var_set);
  for (const auto& p : scheme.premises) p.collect_vars(var_set);
  const std::vector<std::string> vars(var_set.begin(), var_set.end());

  bool sound = true;
  for_each_valuation(g, vars, [&](const Valuation& v) {
    for (const auto& premise : scheme.premises)
      if (!holds_in(g, v, premise)) return true; // premises not all satisfied
    if (!holds_in(g, v, scheme.conclusion)) {
      sound = false;
      return false;
    }
    return true;
  });
  return sound;
}

} // namespace lea
