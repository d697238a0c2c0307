#include "lea/proof.hpp"

#include <algorithm>
#include <sstream>

namespace lea {

namespace {

const Formula kPhi = Formula::var("phi");
const Formula kPsi = Formula::var("psi");
const Formula kMu = Formula::var("mu");
const Formula kChi = Formula::var("chi");

Formula P(Formula a, Formula b) { return Formula::prod(std::move(a), std::move(b)); }
Formula N(Formula a) { return Formula::neg(std::move(a)); }

} // namespace

RuleRegistry::RuleRegistry(ChiMode chi_mode) : chi_mode_(chi_mode) {
  const Formula B = Formula::bot();
  const Formula T = Formula::top();

  auto axiom_pair = [&](const std::string& id, const Formula& lhs,
                        const Formula& rhs, std::vector<std::string> mv) {
    rules_.push_back({id + ".lr", {}, Sequent{lhs, rhs}, mv});
    rules_.push_back({id + ".rl", {}, Sequent{rhs, lhs}, std::move(mv)});
  };

  axiom_pair("DN", N(N(kPhi)), kPhi, {"phi"});
  axiom_pair("1-l", P(T, kPhi), kPhi, {"phi"});
  axiom_pair("1-r", P(kPhi, T), kPhi, {"phi"});
  axiom_pair("0-l", P(B, kPhi), B, {"phi"});
  axiom_pair("0-r", P(kPhi, B), B, {"phi"});
  axiom_pair("ol", B, P(kPhi, P(kPsi, N(kPhi))), {"phi", "psi"});
  axiom_pair("or", B, P(P(kPsi, N(kPhi)), kPhi), {"phi", "psi"});
  axiom_pair("cm", P(kPhi, N(P(N(kPsi), kPhi))), P(N(P(N(kPsi), kPhi)), kPhi),
             {"phi", "psi"});
  axiom_pair("mc", P(N(P(N(kPsi), kPhi)), kPhi), P(N(P(N(kPhi), kPsi)), kPsi),
             {"phi", "psi"});
  axiom_pair("ocm", P(kPhi, kPsi),
             P(kPsi, N(P(N(P(N(kPsi), N(kPhi))), N(kPhi)))), {"phi", "psi"});
  // With the paper-literal chi, psi never occurs in the scheme; (mds) nodes
  // then need an explicit :bind psi to be checkable.
  axiom_pair("mds", P(chi(kPhi, kPsi, chi_mode), kMu),
             chi(P(kPhi, kMu), P(kPsi, kMu), chi_mode), {"phi", "psi", "mu"});

  rules_.push_back({"not-r", {Sequent{kPhi, N(kPsi)}}, Sequent{kPsi, N(kPhi)},
                    {"phi", "psi"}});
  rules_.push_back({"itm1", {Sequent{kPhi, kPsi}, Sequent{kPsi, kPhi}},
                    Sequent{P(kPhi, kMu), P(kPsi, kMu)}, {"phi", "psi", "mu"}});
  rules_.push_back({"itm2", {Sequent{kPhi, kPsi}, Sequent{kPsi, kPhi}},
                    Sequent{P(kMu, kPhi), P(kMu, kPsi)}, {"phi", "psi", "mu"}});
  rules_.push_back({"m-bot", {Sequent{P(kPhi, N(kPsi)), B}}, Sequent{kPhi, kPsi},
                    {"phi", "psi"}});
  rules_.push_back({"bot-m", {Sequent{kPhi, kPsi}}, Sequent{P(kPhi, N(kPsi)), B},
                    {"phi", "psi"}});
  rules_.push_back({"cut", {Sequent{kPhi, kPsi}, Sequent{kPsi, kChi}},
                    Sequent{kPhi, kChi}, {"phi", "psi", "chi"}});

  const std::vector<Sequent> ass_premises{Sequent{N(kPhi), kPsi},
                                          Sequent{N(P(kPhi, kPsi)), kMu}};
  rules_.push_back({"ass1", ass_premises, Sequent{N(kPsi), kMu},
                    {"phi", "psi", "mu"}});
  rules_.push_back({"ass2", ass_premises, Sequent{N(kPhi), P(kPsi, kMu)},
                    {"phi", "psi", "mu"}});
  rules_.push_back({"ass3.lr", ass_premises,
                    Sequent{P(P(kPhi, kPsi), kMu), P(kPhi, P(kPsi, kMu))},
                    {"phi", "psi", "mu"}});
  rules_.push_back({"ass3.rl", ass_premises,
                    Sequent{P(kPhi, P(kPsi, kMu)), P(P(kPhi, kPsi), kMu)},
                    {"phi", "psi", "mu"}});
}

const RuleScheme* RuleRegistry::find(const std::string& id) const {
  for (const auto& r : rules_)
    if (r.id == id) return &r;
  return nullptr;
}

std::vector<std::string> RuleRegistry::axiom_ids() const {
  std::vector<std::string> out;
  for (const auto& r : rules_)
    if (r.premises.empty()) out.push_back(r.id);
  return out;
}

std::vector<std::string> RuleRegistry::inference_ids() const {
  std::vector<std::string> out;
  for (const auto& r : rules_)
    if (!r.premises.empty()) out.push_back(r.id);
  return out;
}

namespace {

/// One-way unification: pattern variables match any formula, everything else
/// must agree structurally. Repeated pattern variables must match equal
/// formulas.
bool match_formula(const Formula& pattern, const Formula& concrete,
                   std::map<std::string, Formula>& subst) {
  switch (pattern.kind()) {
    case Formula::Kind::Var: {
      auto [it, inserted] = subst.emplace(pattern.var_name(), concrete);
      return inserted || it->second == concrete;
    }
    case Formula::Kind::Bot:
    case Formula::Kind::Top:
      return pattern.kind() == concrete.kind();
    case Formula::Kind::Neg:
      return concrete.kind() == Formula::Kind::Neg &&
             match_formula(pattern.body(), concrete.body(), subst);
    case Formula::Kind::Prod:
      return concrete.kind() == Formula::Kind::Prod &&
             match_formula(pattern.left(), concrete.left(), subst) &&
             match_formula(pattern.right(), concrete.right(), subst);
  }
  return false;
}

bool match_sequent(const Sequent& pattern, const Sequent& concrete,
                   std::map<std::string, Formula>& subst) {
  return match_formula(pattern.lhs, concrete.lhs, subst) &&
         match_formula(pattern.rhs, concrete.rhs, subst);
}

void check_node(const ProofNode& node, const RuleRegistry& rules,
                const std::string& path, CheckResult& result) {
  auto issue = [&](std::string message) {
    result.ok = false;
    result.issues.push_back({path, node.rule, std::move(message)});
  };

  const RuleScheme* scheme = rules.find(node.rule);
  if (!scheme) {
    if (rules.find(node.rule + ".lr"))
      issue("rule '" + node.rule + "' needs a direction tag ('" + node.rule +
            ".lr' or '" + node.rule + ".rl')");
    else
      issue("unknown rule '" + node.rule + "'");
  } else if (node.premises.size() != scheme->premises.size()) {
    issue("rule '" + node.rule + "' takes " +
          std::to_string(scheme->premises.size()) + " premise(s), got " +
          std::to_string(node.premises.size()));
  } else {
    std::map<std::string, Formula> subst;
    bool bindings_ok = true;
    for (const auto& [name, f] : node.bindings) {
      if (std::find(scheme->metavars.begin(), scheme->metavars.end(), name) ==
          scheme->metavars.end()) {
        issue("binding for '" + name + "', which is not a metavariable of '" +
              node.rule + "'");
        bindings_ok = false;
      } else {
        subst.emplace(name, f);
      }
    }
    if (bindings_ok) {
      if (!match_sequent(scheme->conclusion, node.conclusion, subst)) {
        issue("conclusion '" + print_sequent(node.conclusion) +
              "' does not instantiate rule '" + node.rule + "'");
      } else {
        bool premises_ok = true;
        for (std::size_t i = 0; i < node.premises.size(); ++i) {
          if (!match_sequent(scheme->premises[i], node.premises[i].conclusion,
                             subst)) {
            issue("premise " + std::to_string(i) + " '" +
                  print_sequent(node.premises[i].conclusion) +
                  "' does not fit rule '" + node.rule + "'");
            premises_ok = false;
            break;
          }
        }
        if (premises_ok) {
          for (const auto& mv : scheme->metavars)
            if (!subst.count(mv))
              issue("metavariable '" + mv +
                    "' is not determined by matching; add ':bind " + mv +
                    " \"<formula>\"'");
        }
      }
    }
  }

  for (std::size_t i = 0; i < node.premises.size(); ++i) {
    const std::string child_path =
        path.empty() ? std::to_string(i) : path + "/" + std::to_string(i);
    check_node(node.premises[i], rules, child_path, result);
  }
}

} // namespace

CheckResult check_proof(const ProofNode& proof, const RuleRegistry& rules) {
  CheckResult result;
  check_node(proof, rules, "", result);
  return result;
}

namespace {

ProofNode leaf(std::string rule, Sequent conclusion) {
  return ProofNode{std::move(rule), std::move(conclusion), {}, {}};
}

ProofNode infer(std::string rule, Sequent conclusion, std::vector<ProofNode> premises) {
  return ProofNode{std::move(rule), std::move(conclusion), std::move(premises), {}};
}

/// phi.~phi |- bot, via 1-l/itm2 to insert the unit, then (ol) at psi = top.
ProofNode contradiction_proof(const Formula& phi) {
  const Formula T = Formula::top();
  const Formula B = Formula::bot();
  Formula tnp = P(T, N(phi));
  ProofNode up = leaf("1-l.rl", Sequent{N(phi), tnp});
  ProofNode down = leaf("1-l.lr", Sequent{tnp, N(phi)});
  ProofNode widen =
      infer("itm2", Sequent{P(phi, N(phi)), P(phi, tnp)}, {up, down});
  ProofNode collapse = leaf("ol.rl", Sequent{P(phi, tnp), B});
  return infer("cut", Sequent{P(phi, N(phi)), B}, {widen, collapse});
}

ProofNode expand_ax(const Formula& phi) {
  return infer("m-bot", Sequent{phi, phi}, {contradiction_proof(phi)});
}

ProofNode expand_tnb_lr() {
  const Formula B = Formula::bot();
  const Formula T = Formula::top();
  ProofNode dn_down = leaf("DN.lr", Sequent{N(N(B)), B});
  ProofNode dn_up = leaf("DN.rl", Sequent{B, N(N(B))});
  ProofNode rewrite =
      infer("itm2", Sequent{P(T, N(N(B))), P(T, B)}, {dn_down, dn_up});
  ProofNode drop = leaf("0-r.lr", Sequent{P(T, B), B});
  ProofNode chained = infer("cut", Sequent{P(T, N(N(B))), B}, {rewrite, drop});
  return infer("m-bot", Sequent{T, N(B)}, {chained});
}

ProofNode expand_tnb_rl() {
  const Formula B = Formula::bot();
  const Formula T = Formula::top();
  Formula product = P(N(B), N(T));
  ProofNode widen = leaf("1-l.rl", Sequent{product, P(T, product)});
  ProofNode collapse = leaf("ol.rl", Sequent{P(T, product), B});
  ProofNode chained = infer("cut", Sequent{product, B}, {widen, collapse});
  return infer("m-bot", Sequent{N(B), T}, {chained});
}

ProofNode expand_ntb_lr() {
  const Formula B = Formula::bot();
  const Formula T = Formula::top();
  Formula tnt = P(T, N(T));
  ProofNode step1 = leaf("1-l.rl", Sequent{N(T), tnt});
  ProofNode step2 = leaf("1-l.rl", Sequent{tnt, P(T, tnt)});
  ProofNode lifted = infer("cut", Sequent{N(T), P(T, tnt)}, {step1, step2});
  ProofNode collapse = leaf("ol.rl", Sequent{P(T, tnt), B});
  return infer("cut", Sequent{N(T), B}, {lifted, collapse});
}

ProofNode expand_ntb_rl() {
  const Formula B = Formula::bot();
  const Formula T = Formula::top();
  return infer("not-r", Sequent{B, N(T)}, {expand_tnb_lr()});
}

ProofNode expand_bot(const Formula& phi) {
  const Formula B = Formula::bot();
  ProofNode axiom = leaf("0-l.lr", Sequent{P(B, N(phi)), B});
  return infer("m-bot", Sequent{B, phi}, {axiom});
}

ProofNode expand_top(const Formula& phi) {
  const Formula B = Formula::bot();
  const Formula T = Formula::top();
  ProofNode rewrite = infer("itm2", Sequent{P(phi, N(T)), P(phi, B)},
                            {expand_ntb_lr(), expand_ntb_rl()});
  ProofNode drop = leaf("0-r.lr", Sequent{P(phi, B), B});
  ProofNode chained = infer("cut", Sequent{P(phi, N(T)), B}, {rewrite, drop});
  return infer("m-bot", Sequent{phi, T}, {chained});
}

ProofNode expand_not_not(const ProofNode& premise) {
  const Formula phi = premise.conclusion.lhs;
  const Formula psi = premise.conclusion.rhs;
  ProofNode dn = leaf("DN.rl", Sequent{psi, N(N(psi))});
  ProofNode lifted = infer("cut", Sequent{phi, N(N(psi))}, {premise, dn});
  return infer("not-r", Sequent{N(psi), N(phi)}, {lifted});
}

ProofNode expand_not_l(const ProofNode& premise) {
  if (premise.conclusion.lhs.kind() != Formula::Kind::Neg)
    throw Error("not-l expects a premise proof of '~phi |- psi'; got '" +
                print_sequent(premise.conclusion) + "'");
  const Formula phi = premise.conclusion.lhs.body();
  const Formula psi = premise.conclusion.rhs;
  ProofNode dn = leaf("DN.rl", Sequent{psi, N(N(psi))});
  ProofNode lifted = infer("cut", Sequent{N(phi), N(N(psi))}, {premise, dn});
  ProofNode contra = infer("not-r", Sequent{N(psi), N(N(phi))}, {lifted});
  ProofNode dn_down = leaf("DN.lr", Sequent{N(N(phi)), phi});
  return infer("cut", Sequent{N(psi), phi}, {contra, dn_down});
}

const Formula& formula_arg(const std::string& rule,
                           const std::vector<Formula>& formulas) {
  if (formulas.size() != 1)
    throw Error("derived rule '" + rule + "' takes exactly one formula argument");
  return formulas[0];
}

const ProofNode& subproof_arg(const std::string& rule,
                              const std::vector<ProofNode>& subproofs) {
  if (subproofs.size() != 1)
    throw Error("derived rule '" + rule + "' takes exactly one subproof argument");
  return subproofs[0];
}

} // namespace

ProofNode expand_derived(const std::string& rule,
                         const std::vector<Formula>& formulas,
                         const std::vector<ProofNode>& subproofs) {
  if (rule == "Ax") return expand_ax(formula_arg(rule, formulas));
  if (rule == "tnb.lr") return expand_tnb_lr();
  if (rule == "tnb.rl") return expand_tnb_rl();
  if (rule == "ntb.lr") return expand_ntb_lr();
  if (rule == "ntb.rl") return expand_ntb_rl();
  if (rule == "bot") return expand_bot(formula_arg(rule, formulas));
  if (rule == "top") return expand_top(formula_arg(rule, formulas));
  if (rule == "not-not" || rule == "¬-¬")
    return expand_not_not(subproof_arg(rule, subproofs));
  if (rule == "not-l" || rule == "¬-l")
    return expand_not_l(subproof_arg(rule, subproofs));
  throw Error("unknown derived rule '" + rule +
              "' (expected Ax, tnb.lr, tnb.rl, ntb.lr, ntb.rl, bot, top, "
              "not-not or not-l)");
}

namespace {

/// Tokenizer for the proof-term format: parens, double-quoted strings and
/// bare atoms; `#` comments run to end of line.
struct Token {
  enum class Type { LParen, RParen, String, Atom, End } type;
  std::string text;
  int line;
};

class ProofLexer {
public:
  explicit ProofLexer(const std::string& text) : text_(text) {}

  Token next() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '\n') {
        ++line_;
        ++pos_;
      } else if (c == ' ' || c == '\t' || c == '\r') {
        ++pos_;
      } else if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
    if (pos_ >= text_.size()) return {Token::Type::End, "", line_};
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      return {Token::Type::LParen, "(", line_};
    }
    if (c == ')') {
      ++pos_;
      return {Token::Type::RParen, ")", line_};
    }
    if (c == '"') {
      std::size_t start = ++pos_;
      while (pos_ < text_.size() && text_[pos_] != '"') {
        if (text_[pos_] == '\n') ++line_;
        ++pos_;
      }
      if (pos_ >= text_.size())
        throw FormatError("unterminated string", line_);
      std::string s = text_.substr(start, pos_ - start);
      ++pos_;
      return {Token::Type::String, s, line_};
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
           text_[pos_] != '(' && text_[pos_] != ')' && text_[pos_] != '"' &&
           text_[pos_] != '#')
      ++pos_;
    return {Token::Type::Atom, text_.substr(start, pos_ - start), line_};
  }

  Token peek() {
    std::size_t save_pos = pos_;
    int save_line = line_;
    Token t = next();
    pos_ = save_pos;
    line_ = save_line;
    return t;
  }

private:
  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1;
};

ProofNode parse_term(ProofLexer& lex) {
  Token open = lex.next();
  if (open.type != Token::Type::LParen)
    throw FormatError("expected '(' to open a proof term", open.line);
  Token rule = lex.next();
  if (rule.type != Token::Type::Atom)
    throw FormatError("expected a rule id after '('", rule.line);
  Token concl = lex.next();
  if (concl.type != Token::Type::String)
    throw FormatError("expected a quoted conclusion sequent after the rule id",
                      concl.line);

  ProofNode node;
  node.rule = rule.text;
  try {
    node.conclusion = parse_sequent(concl.text);
  } catch (const FormatError& err) {
    throw FormatError("in conclusion of '" + rule.text + "': " + err.what(),
                      concl.line);
  }

  while (true) {
    Token t = lex.peek();
    if (t.type == Token::Type::Atom && t.text == ":bind") {
      lex.next();
      Token name = lex.next();
      if (name.type != Token::Type::Atom)
        throw FormatError("expected a metavariable name after :bind", name.line);
      Token value = lex.next();
      if (value.type != Token::Type::String)
        throw FormatError("expected a quoted formula after :bind " + name.text,
                          value.line);
      node.bindings[name.text] = parse_formula(value.text);
    } else if (t.type == Token::Type::LParen) {
      node.premises.push_back(parse_term(lex));
    } else if (t.type == Token::Type::RParen) {
      lex.next();
      return node;
    } else {
      throw FormatError("expected ':bind', a subproof or ')'", t.line);
    }
  }
}

void print_term(const ProofNode& node, int depth, std::string& out) {
  const std::string indent(static_cast<std::size_t>(depth) * 2, ' ');
  out += indent + "(" + node.rule + " \"" + print_sequent(node.conclusion) + "\"";
  for (const auto& [name, f] : node.bindings)
    out += "\n" + indent + "  :bind " + name + " \"" + print_formula(f) + "\"";
  for (const auto& premise : node.premises) {
    out += "\n";
    print_term(premise, depth + 1, out);
  }
  out += ")";
}

} // namespace

std::vector<ProofNode> parse_proofs(const std::string& text) {
  ProofLexer lex(text);
  std::vector<ProofNode> out;
  while (true) {
    Token t = lex.peek();
    if (t.type == Token::Type::End) break;
    out.push_back(parse_term(lex));
  }
  return out;
}

std::string print_proof(const ProofNode& proof) {
  std::string out;
  print_term(proof, 0, out);
  out += "\n";
  return out;
}

} // namespace lea
