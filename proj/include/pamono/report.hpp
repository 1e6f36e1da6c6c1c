#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace pamono {

// Table entry / detail sentinel: a composition cell that holds no element.
inline constexpr int kUndefined = -1;

enum class ViolationKind {
  S_NOT_IDEMPOTENT,
  T_NOT_IDEMPOTENT,
  DEFINEDNESS,
  RIGHT_UNIT,
  LEFT_UNIT,
  ASSOCIATIVITY,
  DERIVED_ST_FIX,
  DERIVED_COMP_ENDPOINTS,
  DERIVED_UNIT_SET,
  DERIVED_UNIT_IDEMPOTENT,
  NO_INVERSE,
  UNIQUENESS,
  HOM_COMP,
  HOM_S,
  HOM_T,
  ID_COMMUTE,
  COMPAT,
  EXCHANGE,
  CELL_CLOSURE,
  TWO_CAT_IDENTITY,
  TWO_CAT_IMAGE,
  NOT_ONE_OBJECT,
};

inline const char* to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::S_NOT_IDEMPOTENT: return "S_NOT_IDEMPOTENT";
    case ViolationKind::T_NOT_IDEMPOTENT: return "T_NOT_IDEMPOTENT";
    case ViolationKind::DEFINEDNESS: return "DEFINEDNESS";
    case ViolationKind::RIGHT_UNIT: return "RIGHT_UNIT";
    case ViolationKind::LEFT_UNIT: return "LEFT_UNIT";
    case ViolationKind::ASSOCIATIVITY: return "ASSOCIATIVITY";
    case ViolationKind::DERIVED_ST_FIX: return "DERIVED_ST_FIX";
    case ViolationKind::DERIVED_COMP_ENDPOINTS: return "DERIVED_COMP_ENDPOINTS";
    case ViolationKind::DERIVED_UNIT_SET: return "DERIVED_UNIT_SET";
    case ViolationKind::DERIVED_UNIT_IDEMPOTENT: return "DERIVED_UNIT_IDEMPOTENT";
    case ViolationKind::NO_INVERSE: return "NO_INVERSE";
    case ViolationKind::UNIQUENESS: return "UNIQUENESS";
    case ViolationKind::HOM_COMP: return "HOM_COMP";
    case ViolationKind::HOM_S: return "HOM_S";
    case ViolationKind::HOM_T: return "HOM_T";
    case ViolationKind::ID_COMMUTE: return "ID_COMMUTE";
    case ViolationKind::COMPAT: return "COMPAT";
    case ViolationKind::EXCHANGE: return "EXCHANGE";
    case ViolationKind::CELL_CLOSURE: return "CELL_CLOSURE";
    case ViolationKind::TWO_CAT_IDENTITY: return "TWO_CAT_IDENTITY";
    case ViolationKind::TWO_CAT_IMAGE: return "TWO_CAT_IMAGE";
    case ViolationKind::NOT_ONE_OBJECT: return "NOT_ONE_OBJECT";
  }
  return "?";
}

/// One broken law, with enough witnesses to recompute it by hand.
/// `lhs`/`rhs` hold the two values that disagree (kUndefined marks an
/// undefined side). `where` tags the sub-law or the structure (axis)
/// the violation belongs to; empty for single-structure checks.
struct AxiomViolation {
  ViolationKind kind;
  std::vector<int> witnesses;  // up to 4 element indices
  int lhs = kUndefined;
  int rhs = kUndefined;
  std::string where;

  friend bool operator==(const AxiomViolation& a, const AxiomViolation& b) {
    return a.kind == b.kind && a.witnesses == b.witnesses && a.lhs == b.lhs &&
           a.rhs == b.rhs && a.where == b.where;
  }
  friend bool operator<(const AxiomViolation& a, const AxiomViolation& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    if (a.where != b.where) return a.where < b.where;
    if (a.witnesses != b.witnesses) return a.witnesses < b.witnesses;
    if (a.lhs != b.lhs) return a.lhs < b.lhs;
    return a.rhs < b.rhs;
  }
};

struct ValidationReport {
  std::vector<AxiomViolation> violations;

  bool valid() const { return violations.empty(); }

  void add(ViolationKind kind, std::vector<int> witnesses, int lhs = kUndefined,
           int rhs = kUndefined, std::string where = {}) {
    violations.push_back({kind, std::move(witnesses), lhs, rhs, std::move(where)});
  }

  void append(const ValidationReport& other) {
    violations.insert(violations.end(), other.violations.begin(),
                      other.violations.end());
  }

  // Canonical ordering: by kind, then sub-law tag, then witnesses.
  void finalize() { std::sort(violations.begin(), violations.end()); }

  bool has_kind(ViolationKind k) const {
    return std::any_of(violations.begin(), violations.end(),
                       [k](const AxiomViolation& v) { return v.kind == k; });
  }

  friend bool operator==(const ValidationReport& a, const ValidationReport& b) {
    return a.violations == b.violations;
  }
};

}  // namespace pamono
