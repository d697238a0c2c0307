#ifndef LEA_TEXT_FORMAT_HPP
#define LEA_TEXT_FORMAT_HPP

#include <iosfwd>
#include <string>
#include <variant>

#include "lea/effect_algebra.hpp"
#include "lea/effect_groupoid.hpp"

namespace lea {

/// The shared algebra text format (UTF-8, line-based, `#` starts a comment):
///
///   kind: effect-algebra | effect-groupoid
///   size: n
///   names: s0 ... s(n-1)        # optional
///   zero: i
///   one: j
///   inv: i0 ... i(n-1)
///   table:
///   <n rows of n entries>       # entries are element indices;
///                               # `-` marks undefined (effect-algebra only)
///
/// Writers emit exactly this layout, so identical structures serialize to
/// identical bytes.

using AnyAlgebra = std::variant<EffectAlgebra, EffectGroupoid>;

std::string to_text(const EffectAlgebra& e);
std::string to_text(const EffectGroupoid& g);
void write_algebra(std::ostream& out, const EffectAlgebra& e);
void write_algebra(std::ostream& out, const EffectGroupoid& g);

/// Parses one algebra block. Throws FormatError (with line numbers) on
/// malformed input. `consumed_lines`, when given, receives the number of
/// input lines the block used (for stream formats embedding several blocks).
AnyAlgebra parse_algebra(const std::string& text);
AnyAlgebra read_algebra(std::istream& in);
AnyAlgebra load_algebra_file(const std::string& path);

} // namespace lea

#endif
