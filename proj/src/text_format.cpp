#include "lea/text_format.hpp"

#include <fstream>
#include <sstream>

namespace lea {

namespace {

void write_common(std::ostream& out, const char* kind, int size, Element zero,
                  Element one, const std::vector<Element>& inv,
                  const std::optional<std::vector<std::string>>& names) {
  out << "kind: " << kind << "\n";
  out << "size: " << size << "\n";
  if (names) {
    out << "names:";
    for (const auto& s : *names) out << " " << s;
    out << "\n";
  }
  out << "zero: " << zero << "\n";
  out << "one: " << one << "\n";
  out << "inv:";
  for (Element v : inv) out << " " << v;
  out << "\n";
  out << "table:\n";
}

/// Line-oriented reader that strips `#` comments and skips blank lines,
/// keeping 1-based line numbers for diagnostics.
class LineReader {
public:
  explicit LineReader(std::istream& in) : in_(in) {}

  /// Next meaningful line, or nullopt at end of input.
  std::optional<std::string> next() {
    std::string raw;
    while (std::getline(in_, raw)) {
      ++line_;
      auto hash = raw.find('#');
      if (hash != std::string::npos) raw.erase(hash);
      while (!raw.empty() && (raw.back() == ' ' || raw.back() == '\t' || raw.back() == '\r'))
        raw.pop_back();
      std::size_t start = raw.find_first_not_of(" \t");
      if (start == std::string::npos) continue;
      return raw.substr(start);
    }
    return std::nullopt;
  }

  int line() const { return line_; }

private:
  std::istream& in_;
  int line_ = 0;
};

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream iss(s);
  std::string tok;
  while (iss >> tok) out.push_back(tok);
  return out;
}

int parse_int(const std::string& tok, const LineReader& r, const char* what) {
  try {
    std::size_t pos = 0;
    int v = std::stoi(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw FormatError(std::string("expected an integer for ") + what +
                          ", got '" + tok + "'",
                      r.line());
  }
}

/// Expects "key: value..." and returns the value part.
std::string expect_key(LineReader& r, const std::string& key) {
  auto line = r.next();
  if (!line) throw FormatError("unexpected end of input, expected '" + key + ":'", r.line());
  if (line->rfind(key + ":", 0) != 0)
    throw FormatError("expected '" + key + ":', got '" + *line + "'", r.line());
  std::string value = line->substr(key.size() + 1);
  std::size_t start = value.find_first_not_of(" \t");
  return start == std::string::npos ? std::string{} : value.substr(start);
}

AnyAlgebra parse_from_reader(LineReader& r) {
  auto first = r.next();
  if (!first) throw FormatError("empty input, expected 'kind:'", r.line());
  if (first->rfind("kind:", 0) != 0)
    throw FormatError("expected 'kind:', got '" + *first + "'", r.line());
  std::string kind = first->substr(5);
  std::size_t start = kind.find_first_not_of(" \t");
  kind = start == std::string::npos ? std::string{} : kind.substr(start);
  const bool is_effect = kind == "effect-algebra";
  if (!is_effect && kind != "effect-groupoid")
    throw FormatError("unknown kind '" + kind + "'", r.line());

  auto size_line = r.next();
  if (!size_line || size_line->rfind("size:", 0) != 0)
    throw FormatError("expected 'size:'", r.line());
  const int n = parse_int(split_ws(size_line->substr(5)).at(0), r, "size");
  if (n < 1) throw FormatError("size must be at least 1", r.line());

  // names is optional and precedes zero.
  std::optional<std::vector<std::string>> names;
  auto line = r.next();
  if (!line) throw FormatError("unexpected end of input, expected 'zero:'", r.line());
  if (line->rfind("names:", 0) == 0) {
    auto toks = split_ws(line->substr(6));
    if (static_cast<int>(toks.size()) != n)
      throw FormatError("names: expected " + std::to_string(n) + " entries, got " +
                            std::to_string(toks.size()),
                        r.line());
    names = toks;
    line = r.next();
    if (!line) throw FormatError("unexpected end of input, expected 'zero:'", r.line());
  }
  if (line->rfind("zero:", 0) != 0)
    throw FormatError("expected 'zero:', got '" + *line + "'", r.line());
  const int zero = parse_int(split_ws(line->substr(5)).at(0), r, "zero");

  const int one = parse_int(split_ws(expect_key(r, "one")).at(0), r, "one");

  auto inv_toks = split_ws(expect_key(r, "inv"));
  if (static_cast<int>(inv_toks.size()) != n)
    throw FormatError("inv: expected " + std::to_string(n) + " entries, got " +
                          std::to_string(inv_toks.size()),
                      r.line());
  std::vector<Element> inv(n);
  for (int i = 0; i < n; ++i) {
    inv[i] = parse_int(inv_toks[i], r, "inv entry");
    if (inv[i] < 0 || inv[i] >= n)
      throw FormatError("inv entry out of range: " + inv_toks[i], r.line());
  }
  if (zero < 0 || zero >= n) throw FormatError("zero out of range", r.line());
  if (one < 0 || one >= n) throw FormatError("one out of range", r.line());

  auto table_line = r.next();
  if (!table_line || *table_line != "table:")
    throw FormatError("expected 'table:'", r.line());

  std::vector<std::vector<std::string>> rows;
  for (int i = 0; i < n; ++i) {
    auto row_line = r.next();
    if (!row_line)
      throw FormatError("table truncated: expected " + std::to_string(n) +
                            " rows, got " + std::to_string(i),
                        r.line());
    auto toks = split_ws(*row_line);
    if (static_cast<int>(toks.size()) != n)
      throw FormatError("table row " + std::to_string(i) + ": expected " +
                            std::to_string(n) + " entries, got " +
                            std::to_string(toks.size()),
                        r.line());
    rows.push_back(std::move(toks));
  }

  if (is_effect) {
    EffectAlgebra e;
    e.size = n;
    e.plus.assign(static_cast<std::size_t>(n) * n, std::nullopt);
    e.inv = inv;
    e.zero = zero;
    e.one = one;
    e.names = names;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const std::string& tok = rows[i][j];
        if (tok == "-") continue;
        int v = parse_int(tok, r, "table entry");
        if (v < 0 || v >= n)
          throw FormatError("table entry out of range: " + tok, r.line());
        e.set_plus(i, j, v);
      }
    return e;
  }

  EffectGroupoid g;
  g.size = n;
  g.dot.assign(static_cast<std::size_t>(n) * n, 0);
  g.inv = inv;
  g.zero = zero;
  g.one = one;
  g.names = names;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const std::string& tok = rows[i][j];
      if (tok == "-")
        throw FormatError("'-' (undefined) is not allowed in an effect-groupoid table",
                          r.line());
      int v = parse_int(tok, r, "table entry");
      if (v < 0 || v >= n)
        throw FormatError("table entry out of range: " + tok, r.line());
      g.set_dot(i, j, v);
    }
  return g;
}

} // namespace

void write_algebra(std::ostream& out, const EffectAlgebra& e) {
  write_common(out, "effect-algebra", e.size, e.zero, e.one, e.inv, e.names);
  for (int i = 0; i < e.size; ++i) {
    for (int j = 0; j < e.size; ++j) {
      if (j) out << " ";
      auto v = e.plus_at(i, j);
      if (v)
        out << *v;
      else
        out << "-";
    }
    out << "\n";
  }
}

void write_algebra(std::ostream& out, const EffectGroupoid& g) {
  write_common(out, "effect-groupoid", g.size, g.zero, g.one, g.inv, g.names);
  for (int i = 0; i < g.size; ++i) {
    for (int j = 0; j < g.size; ++j) {
      if (j) out << " ";
      out << g.dot_at(i, j);
    }
    out << "\n";
  }
}

std::string to_text(const EffectAlgebra& e) {
  std::ostringstream oss;
  write_algebra(oss, e);
  return oss.str();
}

std::string to_text(const EffectGroupoid& g) {
  std::ostringstream oss;
  write_algebra(oss, g);
  return oss.str();
}

AnyAlgebra read_algebra(std::istream& in) {
  LineReader r(in);
  return parse_from_reader(r);
}

AnyAlgebra parse_algebra(const std::string& text) {
  std::istringstream iss(text);
  return read_algebra(iss);
}

AnyAlgebra load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path + "'");
  return read_algebra(in);
}

} // namespace lea
