#ifndef LEA_CORE_HPP
#define LEA_CORE_HPP

#include <stdexcept>
#include <string>

namespace lea {

/// Elements of a finite structure are dense indices 0..n-1. Zero and one are
/// recorded explicitly per structure; no index carries a positional meaning.
using Element = int;

/// Raised on contract violations and internal contradictions (e.g. asking for
/// the groupoid of a non-lattice effect algebra).
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Raised by the text-format and proof-term parsers. `line` is 1-based;
/// 0 means "no position available".
class FormatError : public Error {
public:
  FormatError(std::string message, int line = 0, int column = 0)
      : Error(line > 0 ? "line " + std::to_string(line) +
                             (column > 0 ? ":" + std::to_string(column) : "") +
                             ": " + message
                       : message),
        line_(line), column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

private:
  int line_ = 0;
  int column_ = 0;
};

struct Limits {
  /// Largest structure any exhaustive check will accept. All checks are
  /// O(n^3) table scans, so this is a desk-scale guard, not a soft hint.
  int max_structure_size = 64;
  /// Largest size bound enumerate_groupoids will accept.
  int max_enumeration_size = 6;
  /// Largest number of distinct variables sequent_valid_in will enumerate
  /// valuations for (|G|^k blows up fast).
  int max_sequent_vars = 4;
};

inline const Limits& default_limits() {
  static const Limits limits{};
  return limits;
}

} // namespace lea

#endif
