#ifndef LEA_FORMULA_HPP
#define LEA_FORMULA_HPP

#include <memory>
#include <set>
#include <string>

#include "lea/core.hpp"

namespace lea {

/// Immutable formula tree over variables, product, negation and the two
/// constants. Copies share nodes; equality is structural.
///
/// Concrete grammar (used by parse_formula and print_formula):
///   variables  [a-z][a-zA-Z0-9_]*  except the keywords `bot`, `top`
///   negation   prefix `~`, binds tighter than product
///   product    infix `*`, left-associative
///   grouping   `(` `)`
class Formula {
public:
  enum class Kind { Var, Prod, Neg, Bot, Top };

  Formula() : Formula(bot()) {}

  static Formula var(std::string name);
  static Formula prod(Formula left, Formula right);
  static Formula neg(Formula body);
  static Formula bot();
  static Formula top();

  Kind kind() const { return node_->kind; }
  const std::string& var_name() const { return node_->name; } // Kind::Var only
  Formula left() const { return Formula(node_->left); }       // Kind::Prod only
  Formula right() const { return Formula(node_->right); }     // Kind::Prod only
  Formula body() const { return Formula(node_->left); }       // Kind::Neg only

  bool operator==(const Formula& other) const;
  bool operator!=(const Formula& other) const { return !(*this == other); }

  /// Total order compatible with structural equality (for use as map keys).
  bool operator<(const Formula& other) const { return compare(other) < 0; }
  int compare(const Formula& other) const;

  /// Adds the names of all variables occurring in the formula.
  void collect_vars(std::set<std::string>& out) const;

private:
  struct Node {
    Kind kind;
    std::string name;
    std::shared_ptr<const Node> left, right;
  };

  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// The entailment pair lhs |- rhs.
struct Sequent {
  Formula lhs;
  Formula rhs;

  bool operator==(const Sequent&) const = default;
  void collect_vars(std::set<std::string>& out) const {
    lhs.collect_vars(out);
    rhs.collect_vars(out);
  }
};

/// Parses the concrete grammar above. Throws FormatError with a 1-based
/// column position on malformed input.
Formula parse_formula(const std::string& text);

/// Prints with minimal parentheses; parse_formula(print_formula(f)) == f.
std::string print_formula(const Formula& f);

/// `<formula> |- <formula>`.
Sequent parse_sequent(const std::string& text);
std::string print_sequent(const Sequent& s);

/// Which shape the (mds) side condition chi(phi, psi) takes.
enum class ChiMode {
  ng7,           // ~(~(phi * ~psi) * ~psi)  — aligned with the (NG7) identity
  paper_literal, // ~(~(phi * ~phi) * ~phi)  — psi does not occur
};

Formula chi(const Formula& phi, const Formula& psi, ChiMode mode = ChiMode::ng7);

} // namespace lea

#endif
