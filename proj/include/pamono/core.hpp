#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "pamono/report.hpp"

namespace pamono {

/// A partial monoid candidate on the finite carrier {0, .., n-1}.
///
/// The composition table is stored total: every (x, y) cell holds either an
/// element index or kUndefined. Definedness is validated against s/t, not
/// enforced structurally, so broken structures can be loaded and diagnosed.
struct PartialMonoidStructure {
  int n = 0;
  std::vector<int> s;   // total, size n
  std::vector<int> t;   // total, size n
  std::vector<int> op;  // n*n row-major, kUndefined allowed

  int at(int x, int y) const { return op[x * n + y]; }
  int& at(int x, int y) { return op[x * n + y]; }
  bool defined(int x, int y) const { return at(x, y) != kUndefined; }

  friend bool operator==(const PartialMonoidStructure& a,
                         const PartialMonoidStructure& b) {
    return a.n == b.n && a.s == b.s && a.t == b.t && a.op == b.op;
  }
};

inline PartialMonoidStructure make_structure(int n, std::vector<int> s,
                                             std::vector<int> t,
                                             std::vector<int> op) {
  if (n < 0) throw std::invalid_argument("carrier size must be >= 0");
  auto check_range = [n](const std::vector<int>& v, size_t want,
                         bool allow_undef, const char* what) {
    if (v.size() != want)
      throw std::invalid_argument(std::string(what) + ": wrong length");
    for (int e : v) {
      if (e == kUndefined && allow_undef) continue;
      if (e < 0 || e >= n)
        throw std::invalid_argument(std::string(what) +
                                    ": element index out of range");
    }
  };
  check_range(s, static_cast<size_t>(n), false, "s");
  check_range(t, static_cast<size_t>(n), false, "t");
  check_range(op, static_cast<size_t>(n) * n, true, "op");
  return {n, std::move(s), std::move(t), std::move(op)};
}

inline void require_well_formed(const PartialMonoidStructure& p) {
  make_structure(p.n, p.s, p.t, p.op);
}

/// Table lookup for the partial composition; kUndefined when the cell is empty.
inline int compose(const PartialMonoidStructure& p, int x, int y) {
  return p.at(x, y);
}

/// Checks the defining axioms:
///   V1  s and t idempotent
///   V2  x*y defined exactly when s(x) = t(y)
///   V3  x*s(x) = x and t(x)*x = x
///   V4  matching associativity: if either z*(x*y) or (z*x)*y is defined,
///       both are, and they agree
/// An empty report means the candidate is a partial monoid.
inline ValidationReport validate_structure(const PartialMonoidStructure& p) {
  require_well_formed(p);
  ValidationReport r;
  const int n = p.n;
  for (int x = 0; x < n; ++x) {
    if (p.s[p.s[x]] != p.s[x])
      r.add(ViolationKind::S_NOT_IDEMPOTENT, {x}, p.s[p.s[x]], p.s[x]);
    if (p.t[p.t[x]] != p.t[x])
      r.add(ViolationKind::T_NOT_IDEMPOTENT, {x}, p.t[p.t[x]], p.t[x]);
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const bool is_def = p.defined(x, y);
      const bool should = p.s[x] == p.t[y];
      if (is_def != should)
        r.add(ViolationKind::DEFINEDNESS, {x, y}, p.at(x, y), kUndefined,
              should ? "expected-defined" : "expected-undefined");
    }
  for (int x = 0; x < n; ++x) {
    if (p.at(x, p.s[x]) != x)
      r.add(ViolationKind::RIGHT_UNIT, {x}, p.at(x, p.s[x]), x);
    if (p.at(p.t[x], x) != x)
      r.add(ViolationKind::LEFT_UNIT, {x}, p.at(p.t[x], x), x);
  }
  for (int z = 0; z < n; ++z)
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        const int xy = p.at(x, y);
        const int lhs = xy == kUndefined ? kUndefined : p.at(z, xy);
        const int zx = p.at(z, x);
        const int rhs = zx == kUndefined ? kUndefined : p.at(zx, y);
        if ((lhs != kUndefined || rhs != kUndefined) && lhs != rhs)
          r.add(ViolationKind::ASSOCIATIVITY, {z, x, y}, lhs, rhs);
      }
  r.finalize();
  return r;
}

inline void require_valid(const PartialMonoidStructure& p) {
  if (!validate_structure(p).valid())
    throw std::invalid_argument("structure is not a partial monoid");
}

/// The unit set Fix(s); on a valid structure this equals Fix(t) = im(s) = im(t).
inline std::vector<int> units(const PartialMonoidStructure& p) {
  require_valid(p);
  std::vector<int> u;
  for (int x = 0; x < p.n; ++x)
    if (p.s[x] == x) u.push_back(x);
  return u;
}

/// Sanity oracle for consequences of the axioms. These are theorems, not
/// axioms: the report must come back empty for every valid structure.
///   P1  t(s(x)) = s(x) and s(t(x)) = t(x)
///   P2  s(x*y) = s(y) and t(x*y) = t(x) on defined composites
///   P3  Fix(s) = Fix(t) = im(s) = im(t)
///   P4  u*u = u for every u in Fix(s)
inline ValidationReport check_derived_properties(const PartialMonoidStructure& p) {
  require_well_formed(p);
  ValidationReport r;
  const int n = p.n;
  for (int x = 0; x < n; ++x) {
    if (p.t[p.s[x]] != p.s[x])
      r.add(ViolationKind::DERIVED_ST_FIX, {x}, p.t[p.s[x]], p.s[x], "t.s");
    if (p.s[p.t[x]] != p.t[x])
      r.add(ViolationKind::DERIVED_ST_FIX, {x}, p.s[p.t[x]], p.t[x], "s.t");
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int xy = p.at(x, y);
      if (xy == kUndefined) continue;
      if (p.s[xy] != p.s[y])
        r.add(ViolationKind::DERIVED_COMP_ENDPOINTS, {x, y}, p.s[xy], p.s[y], "s");
      if (p.t[xy] != p.t[x])
        r.add(ViolationKind::DERIVED_COMP_ENDPOINTS, {x, y}, p.t[xy], p.t[x], "t");
    }
  std::vector<bool> fix_s(n), fix_t(n), im_s(n), im_t(n);
  for (int x = 0; x < n; ++x) {
    fix_s[x] = p.s[x] == x;
    fix_t[x] = p.t[x] == x;
  }
  for (int x = 0; x < n; ++x) {
    im_s[p.s[x]] = true;
    im_t[p.t[x]] = true;
  }
  for (int x = 0; x < n; ++x)
    if (fix_s[x] != fix_t[x] || fix_s[x] != im_s[x] || fix_s[x] != im_t[x])
      r.add(ViolationKind::DERIVED_UNIT_SET, {x});
  for (int u = 0; u < n; ++u)
    if (p.s[u] == u && p.at(u, u) != u)
      r.add(ViolationKind::DERIVED_UNIT_IDEMPOTENT, {u}, p.at(u, u), u);
  r.finalize();
  return r;
}

/// Empty report iff every x has an inverse: some y with x*y = t(x) and
/// y*x = s(x). Also flags duplicate inverses, which cannot occur on a
/// valid structure.
inline ValidationReport detect_groupoid(const PartialMonoidStructure& p) {
  require_valid(p);
  ValidationReport r;
  for (int x = 0; x < p.n; ++x) {
    int found = kUndefined;
    for (int y = 0; y < p.n; ++y) {
      if (p.at(x, y) == p.t[x] && p.at(y, x) == p.s[x]) {
        if (found == kUndefined) {
          found = y;
        } else {
          r.add(ViolationKind::UNIQUENESS, {x, found, y});
        }
      }
    }
    if (found == kUndefined) r.add(ViolationKind::NO_INVERSE, {x});
  }
  r.finalize();
  return r;
}

}  // namespace pamono
