#ifndef LEA_SEMANTICS_HPP
#define LEA_SEMANTICS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lea/effect_groupoid.hpp"
#include "lea/enumerate.hpp"
#include "lea/formula.hpp"
#include "lea/proof.hpp"

namespace lea {

/// Assignment of groupoid elements to variable names.
using Valuation = std::map<std::string, Element>;

/// Homomorphic evaluation: Var -> v, Prod -> dot, Neg -> inv, Bot -> zero,
/// Top -> one. Throws Error on a variable missing from v.
Element eval_formula(const EffectGroupoid& g, const Valuation& v, const Formula& f);

/// True iff eval(lhs) <= eval(rhs) (in the groupoid order a <= b iff
/// a.b' = 0) for every valuation of the sequent's variables into g.
/// Throws Error when the sequent has more distinct variables than
/// limits.max_sequent_vars.
bool sequent_valid_in(const EffectGroupoid& g, const Sequent& s,
                      const Limits& limits = default_limits());

struct Countermodel {
  EffectGroupoid groupoid;
  Valuation valuation;
  int size = 0;        // catalog size class
  int index = 0;       // position within that size class
};

/// First falsifier in catalog order (size ascending, then entry index), with
/// the lexicographically first falsifying valuation (variables sorted by
/// name), or nullopt if the sequent holds in every catalog model.
std::optional<Countermodel> countermodel(const Sequent& s, const Catalog& catalog,
                                         const Limits& limits = default_limits());

struct SweepViolation {
  int proof_index = 0;
  int model_size = 0;
  int model_index = 0;
  std::string sequent;
};

struct SweepReport {
  int proofs = 0;
  int models = 0;
  int checks = 0;
  std::vector<SweepViolation> violations;

  bool ok() const { return violations.empty(); }
};

/// Asserts sequent_valid_in(G, conclusion) for every proof and every catalog
/// model. Every proof must already pass check_proof (Error otherwise). Any
/// violation reported here means the implementation is broken, not the
/// input. `jobs` > 1 splits the proof x model grid; aggregation order is
/// deterministic.
SweepReport soundness_sweep(const std::vector<ProofNode>& proofs,
                            const Catalog& catalog,
                            const RuleRegistry& rules = default_rules(),
                            const Limits& limits = default_limits(),
                            int jobs = 1);

/// Direct semantic soundness of one rule scheme on one model: for every
/// assignment of elements to the scheme's metavariables, if all premises
/// hold then the conclusion holds. Independent of check_proof.
bool rule_semantically_sound(const EffectGroupoid& g, const RuleScheme& scheme);

} // namespace lea

#endif
