#ifndef LEA_PROOF_HPP
#define LEA_PROOF_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lea/formula.hpp"

namespace lea {

/// One node of a derivation tree. `rule` is a directed rule id: premise-
/// bearing rules use their bare name (`cut`, `itm1`, ...), rules stated with
/// |-/-| get a `.lr` / `.rl` suffix for the two directions (`DN.lr`,
/// `ol.rl`, `ass3.lr`, ...). `bindings` pins metavariables the conclusion
/// and premises leave undetermined.
struct ProofNode {
  std::string rule;
  Sequent conclusion;
  std::vector<ProofNode> premises;
  std::map<std::string, Formula> bindings;
};

/// A rule scheme: premise and conclusion patterns over the metavariables
/// phi, psi, mu, chi (represented as pattern variables).
struct RuleScheme {
  std::string id;
  std::vector<Sequent> premises;
  Sequent conclusion;
  std::vector<std::string> metavars;
};

/// The primitive rules of the calculus, instantiated for one chi mode.
class RuleRegistry {
public:
  explicit RuleRegistry(ChiMode chi_mode = ChiMode::ng7);

  const RuleScheme* find(const std::string& id) const;
  const std::vector<RuleScheme>& all() const { return rules_; }
  ChiMode chi_mode() const { return chi_mode_; }

  /// Directed ids of the zero-premise (axiom) schemes.
  std::vector<std::string> axiom_ids() const;
  /// Directed ids of the premise-bearing schemes.
  std::vector<std::string> inference_ids() const;

private:
  std::vector<RuleScheme> rules_;
  ChiMode chi_mode_;
};

inline const RuleRegistry& default_rules() {
  static const RuleRegistry registry{};
  return registry;
}

/// One problem found while checking a proof. `path` addresses the node as
/// slash-separated premise indices from the root ("" = root, "0/1" = second
/// premise of the root's first premise).
struct CheckIssue {
  std::string path;
  std::string rule;
  std::string message;
};

struct CheckResult {
  bool ok = true;
  std::vector<CheckIssue> issues;
};

/// Verifies that every node of the tree instantiates its named rule: arity
/// must match, and the premise conclusions plus the node conclusion must
/// match the scheme under a single consistent metavariable assignment.
/// Explicit bindings seed that assignment and are required whenever matching
/// leaves a metavariable free.
CheckResult check_proof(const ProofNode& proof,
                        const RuleRegistry& rules = default_rules());

/// Expands a derived rule into a tree of primitive rules. Ids and arguments:
///   "Ax"      formulas = {phi}                conclusion  phi |- phi
///   "tnb.lr"                                  top |- ~bot
///   "tnb.rl"                                  ~bot |- top
///   "ntb.lr"                                  ~top |- bot
///   "ntb.rl"                                  bot |- ~top
///   "bot"     formulas = {phi}                bot |- phi
///   "top"     formulas = {phi}                phi |- top
///   "not-not" subproofs = {proof of phi |- psi}        ~psi |- ~phi
///   "not-l"   subproofs = {proof of ~phi |- psi}       ~psi |- phi
/// Throws Error for an unknown id or malformed arguments. Every expansion
/// passes check_proof.
ProofNode expand_derived(const std::string& rule,
                         const std::vector<Formula>& formulas = {},
                         const std::vector<ProofNode>& subproofs = {});

/// Proof-term text format: nested parenthesized terms
///   (<rule-id> "<conclusion sequent>" {:bind <name> "<formula>"}* <subproof>*)
/// UTF-8, whitespace-insensitive, `#` starts a line comment. A file may hold
/// any number of terms.
std::vector<ProofNode> parse_proofs(const std::string& text);
std::string print_proof(const ProofNode& proof);

} // namespace lea

#endif
