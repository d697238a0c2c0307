#ifndef LEA_AXIOM_REPORT_HPP
#define LEA_AXIOM_REPORT_HPP

#include <string>
#include <vector>

#include "lea/core.hpp"

namespace lea {

/// Outcome of checking a single axiom schema against a finite table.
/// On failure, `witness` holds the lexicographically first tuple of elements
/// violating the schema (arity depends on the axiom) and `detail` says what
/// went wrong at that tuple.
struct AxiomCheck {
  std::string id;
  bool passed = true;
  std::vector<Element> witness = {};
  std::string detail = {};
};

/// Report of a full axiom scan. A malformed table (inconsistent dimensions,
/// out-of-range entries) is a structural error and produces no axiom checks,
/// so it can never be confused with an axiom failure.
struct AxiomReport {
  bool structural_ok = true;
  std::string structural_error;
  std::vector<AxiomCheck> checks;

  bool all_passed() const {
    if (!structural_ok) return false;
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }

  const AxiomCheck* find(const std::string& id) const {
    for (const auto& c : checks)
      if (c.id == id) return &c;
    return nullptr;
  }
};

} // namespace lea

#endif
