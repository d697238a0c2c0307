#include "lea/formula.hpp"

#include <cctype>

namespace lea {

Formula Formula::var(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Var;
  n->name = std::move(name);
  return Formula(n);
}

Formula Formula::prod(Formula left, Formula right) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Prod;
  n->left = left.node_;
  n->right = right.node_;
  return Formula(n);
}

Formula Formula::neg(Formula body) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Neg;
  n->left = body.node_;
  return Formula(n);
}

Formula Formula::bot() {
  static const Formula instance = [] {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Bot;
    return Formula(n);
  }();
  return instance;
}

Formula Formula::top() {
  static const Formula instance = [] {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Top;
    return Formula(n);
  }();
  return instance;
}

int Formula::compare(const Formula& other) const {
  const Node* a = node_.get();
  const Node* b = other.node_.get();
  if (a == b) return 0;
  if (a->kind != b->kind)
    return static_cast<int>(a->kind) < static_cast<int>(b->kind) ? -1 : 1;
  switch (a->kind) {
    case Kind::Bot:
    case Kind::Top:
      return 0;
    case Kind::Var:
      return a->name.compare(b->name);
    case Kind::Neg:
      return Formula(a->left).compare(Formula(b->left));
    case Kind::Prod: {
      int c = Formula(a->left).compare(Formula(b->left));
      if (c != 0) return c;
      return Formula(a->right).compare(Formula(b->right));
    }
  }
  return 0;
}

bool Formula::operator==(const Formula& other) const { return compare(other) == 0; }

void Formula::collect_vars(std::set<std::string>& out) const {
  switch (kind()) {
    case Kind::Var:
      out.insert(var_name());
      break;
    case Kind::Prod:
      left().collect_vars(out);
      right().collect_vars(out);
      break;
    case Kind::Neg:
      body().collect_vars(out);
      break;
    default:
      break;
  }
}

namespace {

/// Recursive-descent parser for
///   formula := unary ('*' unary)*        (left-associative)
///   unary   := '~' unary | atom
///   atom    := 'bot' | 'top' | var | '(' formula ')'
class FormulaParser {
public:
  explicit FormulaParser(const std::string& text) : text_(text) {}

  Formula parse() {
    Formula f = product();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return f;
  }

private:
  Formula product() {
    Formula f = unary();
    while (true) {
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        f = Formula::prod(f, unary());
      } else {
        return f;
      }
    }
  }

  Formula unary() {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '~') {
      ++pos_;
      return Formula::neg(unary());
    }
    return atom();
  }

  Formula atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of formula");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Formula f = product();
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'");
      ++pos_;
      return f;
    }
    if (c >= 'a' && c <= 'z') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name = text_.substr(start, pos_ - start);
      if (name == "bot") return Formula::bot();
      if (name == "top") return Formula::top();
      return Formula::var(std::move(name));
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  [[noreturn]] void fail(const std::string& message) {
    throw FormatError(message, 1, static_cast<int>(pos_) + 1);
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

void print_into(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case Formula::Kind::Bot:
      out += "bot";
      break;
    case Formula::Kind::Top:
      out += "top";
      break;
    case Formula::Kind::Var:
      out += f.var_name();
      break;
    case Formula::Kind::Neg:
      out += '~';
      if (f.body().kind() == Formula::Kind::Prod) {
        out += '(';
        print_into(f.body(), out);
        out += ')';
      } else {
        print_into(f.body(), out);
      }
      break;
    case Formula::Kind::Prod:
      // '*' is left-associative, so only a right operand that is itself a
      // product needs parentheses.
      print_into(f.left(), out);
      out += " * ";
      if (f.right().kind() == Formula::Kind::Prod) {
        out += '(';
        print_into(f.right(), out);
        out += ')';
      } else {
        print_into(f.right(), out);
      }
      break;
  }
}

} // namespace

Formula parse_formula(const std::string& text) { return FormulaParser(text).parse(); }

std::string print_formula(const Formula& f) {
  std::string out;
  print_into(f, out);
  return out;
}

Sequent parse_sequent(const std::string& text) {
  auto pos = text.find("|-");
  if (pos == std::string::npos)
    throw FormatError("expected '|-' in sequent", 1, 1);
  if (text.find("|-", pos + 2) != std::string::npos)
    throw FormatError("more than one '|-' in sequent", 1,
                      static_cast<int>(text.find("|-", pos + 2)) + 1);
  return Sequent{parse_formula(text.substr(0, pos)),
                 parse_formula(text.substr(pos + 2))};
}

std::string print_sequent(const Sequent& s) {
  return print_formula(s.lhs) + " |- " + print_formula(s.rhs);
}

Formula chi(const Formula& phi, const Formula& psi, ChiMode mode) {
  const Formula& second = mode == ChiMode::ng7 ? psi : phi;
  // ~(~(phi * ~second) * ~second)
  Formula inner = Formula::neg(Formula::prod(phi, Formula::neg(second)));
  return Formula::neg(Formula::prod(inner, Formula::neg(second)));
}

} // namespace lea
