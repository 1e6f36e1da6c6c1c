#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "pamono/core.hpp"

namespace pamono {

/// One carrier with a horizontal and a vertical partial monoid structure.
struct DoubleStructure {
  int n = 0;
  PartialMonoidStructure h;
  PartialMonoidStructure v;

  friend bool operator==(const DoubleStructure& a, const DoubleStructure& b) {
    return a.n == b.n && a.h == b.h && a.v == b.v;
  }
};

inline void require_well_formed(const DoubleStructure& d) {
  if (d.h.n != d.n || d.v.n != d.n)
    throw std::invalid_argument("double structure: carriers do not match");
  require_well_formed(d.h);
  require_well_formed(d.v);
}

enum class CubicalClass { ONE, TWO, THREE, FOUR };

inline const char* to_string(CubicalClass c) {
  switch (c) {
    case CubicalClass::ONE: return "ONE";
    case CubicalClass::TWO: return "TWO";
    case CubicalClass::THREE: return "THREE";
    case CubicalClass::FOUR: return "FOUR";
  }
  return "?";
}

struct ClassFailure {
  int identity = 0;  // which of the four printed identities broke first
  int element = 0;
  int lhs = 0;
  int rhs = 0;
};

struct CubicalClassification {
  std::set<CubicalClass> satisfied;
  std::map<CubicalClass, ClassFailure> first_failure;
};

/// The emergent cells: d1v = Fix(s_h), d1h = Fix(s_v), d0 = their common
/// fixed points under all four partial identity maps.
struct CellDecomposition {
  std::vector<int> d1v;
  std::vector<int> d1h;
  std::vector<int> d0;
};

namespace detail {

// D2/D3/D4 between two structures sharing one carrier; axis labels only
// decorate the report. validate_double and validate_nfold both route here.
inline void append_pair_conditions(const PartialMonoidStructure& h,
                                   const PartialMonoidStructure& v,
                                   const std::string& hn, const std::string& vn,
                                   ValidationReport& r) {
  const int n = h.n;
  const std::string sep = ".";
  // D2: the class-one commutations
  auto commute = [&](const std::vector<int>& a, const std::string& an,
                     const std::vector<int>& b, const std::string& bn) {
    for (int x = 0; x < n; ++x)
      if (a[b[x]] != b[a[x]])
        r.add(ViolationKind::ID_COMMUTE, {x}, a[b[x]], b[a[x]], an + sep + bn);
  };
  commute(h.s, "s" + hn, v.s, "s" + vn);
  commute(h.t, "t" + hn, v.t, "t" + vn);
  commute(h.t, "t" + hn, v.s, "s" + vn);
  commute(h.s, "s" + hn, v.t, "t" + vn);
  // D3: compatibility of each identity map with the other composition
  auto compat = [&](const PartialMonoidStructure& comp, const std::string& cn,
                    const std::vector<int>& m, const std::string& mn) {
    for (int x = 0; x < n; ++x)
      for (int z = 0; z < n; ++z) {
        const int xz = comp.at(x, z);
        if (xz == kUndefined) continue;
        const int lhs = comp.at(m[x], m[z]);
        if (lhs != m[xz])
          r.add(ViolationKind::COMPAT, {x, z}, lhs, m[xz], mn + "/" + cn);
      }
  };
  compat(h, hn, v.s, "s" + vn);
  compat(h, hn, v.t, "t" + vn);
  compat(v, vn, h.s, "s" + hn);
  compat(v, vn, h.t, "t" + hn);
  // D4: exchange over all quadruples with the four binary composites defined
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int xy = h.at(x, y);
      if (xy == kUndefined) continue;
      for (int w = 0; w < n; ++w) {
        const int xw = v.at(x, w);
        if (xw == kUndefined) continue;
        for (int z = 0; z < n; ++z) {
          const int wz = h.at(w, z);
          const int yz = v.at(y, z);
          if (wz == kUndefined || yz == kUndefined) continue;
          const int lhs = h.at(xw, yz);
          const int rhs = v.at(xy, wz);
          if (lhs == kUndefined || rhs == kUndefined || lhs != rhs)
            r.add(ViolationKind::EXCHANGE, {x, y, w, z}, lhs, rhs,
                  hn + sep + vn);
        }
      }
    }
}

}  // namespace detail

/// Full double-category check:
///   D1  h and v are each partial monoids
///   D2  the four class-one commutations of the identity maps
///   D3  identity maps of one structure are compatible with the other
///       composition
///   D4  the exchange law on every quadruple whose four binary composites
///       are defined
inline ValidationReport validate_double(const DoubleStructure& d) {
  require_well_formed(d);
  ValidationReport r;
  for (auto& viol : validate_structure(d.h).violations) {
    auto v2 = viol;
    v2.where = v2.where.empty() ? "h" : "h:" + v2.where;
    r.violations.push_back(std::move(v2));
  }
  for (auto& viol : validate_structure(d.v).violations) {
    auto v2 = viol;
    v2.where = v2.where.empty() ? "v" : "v:" + v2.where;
    r.violations.push_back(std::move(v2));
  }
  detail::append_pair_conditions(d.h, d.v, "h", "v", r);
  r.finalize();
  return r;
}

inline void require_valid(const DoubleStructure& d) {
  if (!validate_double(d).valid())
    throw std::invalid_argument("not a valid double structure");
}

inline void require_components_valid(const DoubleStructure& d) {
  require_well_formed(d);
  if (!validate_structure(d.h).valid() || !validate_structure(d.v).valid())
    throw std::invalid_argument(
        "component structures are not partial monoids");
}

/// Tests the four printed identity systems pointwise; a structure may land
/// in several classes at once (degenerate identity maps), so the result is
/// a subset. Class four's second identity coincides with class one's.
inline CubicalClassification classify_cubical(const DoubleStructure& d) {
  require_components_valid(d);
  const auto& sh = d.h.s;
  const auto& th = d.h.t;
  const auto& sv = d.v.s;
  const auto& tv = d.v.t;
  using Maps = std::pair<const std::vector<int>*, const std::vector<int>*>;
  // each identity is lhs = outer(inner(x)) vs rhs = outer'(inner'(x))
  struct Identity { Maps lhs, rhs; };
  auto I = [](const std::vector<int>& o, const std::vector<int>& i) {
    return Maps{&o, &i};
  };
  const std::map<CubicalClass, std::vector<Identity>> classes = {
      {CubicalClass::ONE,
       {{I(sh, sv), I(sv, sh)}, {I(th, tv), I(tv, th)},
        {I(th, sv), I(sv, th)}, {I(sh, tv), I(tv, sh)}}},
      {CubicalClass::TWO,
       {{I(sh, sv), I(tv, sh)}, {I(th, tv), I(sv, th)},
        {I(th, sv), I(tv, th)}, {I(sv, sh), I(sh, tv)}}},
      {CubicalClass::THREE,
       {{I(sh, sv), I(sv, th)}, {I(th, tv), I(tv, sh)},
        {I(th, sv), I(sv, sh)}, {I(tv, th), I(sh, tv)}}},
      {CubicalClass::FOUR,
       {{I(sh, sv), I(tv, th)}, {I(th, tv), I(tv, th)},
        {I(th, sv), I(tv, sh)}, {I(sv, th), I(sh, tv)}}},
  };
  CubicalClassification out;
  for (const auto& [cls, ids] : classes) {
    bool ok = true;
    for (int i = 0; i < static_cast<int>(ids.size()) && ok; ++i)
      for (int x = 0; x < d.n && ok; ++x) {
        const int l = (*ids[i].lhs.first)[(*ids[i].lhs.second)[x]];
        const int rr = (*ids[i].rhs.first)[(*ids[i].rhs.second)[x]];
        if (l != rr) {
          ok = false;
          out.first_failure[cls] = {i, x, l, rr};
        }
      }
    if (ok) out.satisfied.insert(cls);
  }
  return out;
}

namespace detail {

inline std::vector<int> fixed_points(const std::vector<int>& m) {
  std::vector<int> out;
  for (int x = 0; x < static_cast<int>(m.size()); ++x)
    if (m[x] == x) out.push_back(x);
  return out;
}

}  // namespace detail

/// Self-audit of the emergent cells on a valid double structure. Empty on
/// every valid input; exposed separately so the property suite can run it.
inline ValidationReport check_cell_properties(const DoubleStructure& d,
                                              const CellDecomposition& c) {
  ValidationReport r;
  auto image = [&](const std::vector<int>& m) {
    std::set<int> s(m.begin(), m.end());
    return std::vector<int>(s.begin(), s.end());
  };
  auto same = [&](const std::vector<int>& a, const std::vector<int>& b,
                  const std::string& tag) {
    if (a != b) r.add(ViolationKind::CELL_CLOSURE, {}, kUndefined, kUndefined, tag);
  };
  same(detail::fixed_points(d.h.s), detail::fixed_points(d.h.t), "fix(sh)=fix(th)");
  same(detail::fixed_points(d.h.s), image(d.h.s), "fix(sh)=im(sh)");
  same(detail::fixed_points(d.h.s), image(d.h.t), "fix(sh)=im(th)");
  same(detail::fixed_points(d.v.s), detail::fixed_points(d.v.t), "fix(sv)=fix(tv)");
  same(detail::fixed_points(d.v.s), image(d.v.s), "fix(sv)=im(sv)");
  same(detail::fixed_points(d.v.s), image(d.v.t), "fix(sv)=im(tv)");
  auto closed = [&](const std::vector<int>& cell,
                    const PartialMonoidStructure& p, const std::string& tag) {
    std::set<int> in(cell.begin(), cell.end());
    for (int x : cell) {
      if (!in.count(p.s[x]))
        r.add(ViolationKind::CELL_CLOSURE, {x}, p.s[x], kUndefined, tag + ":s");
      if (!in.count(p.t[x]))
        r.add(ViolationKind::CELL_CLOSURE, {x}, p.t[x], kUndefined, tag + ":t");
      for (int y : cell) {
        const int xy = p.at(x, y);
        if (xy != kUndefined && !in.count(xy))
          r.add(ViolationKind::CELL_CLOSURE, {x, y}, xy, kUndefined, tag + ":op");
      }
    }
  };
  closed(c.d1v, d.v, "d1v");
  closed(c.d1h, d.h, "d1h");
  // d0 = im(sh . sv), and every object is idempotent for both compositions
  {
    std::set<int> im;
    for (int x = 0; x < d.n; ++x) im.insert(d.h.s[d.v.s[x]]);
    if (std::vector<int>(im.begin(), im.end()) != c.d0)
      r.add(ViolationKind::CELL_CLOSURE, {}, kUndefined, kUndefined,
            "d0=im(sh.sv)");
    for (int u : c.d0) {
      if (d.h.at(u, u) != u)
        r.add(ViolationKind::CELL_CLOSURE, {u}, d.h.at(u, u), u, "d0:h-idem");
      if (d.v.at(u, u) != u)
        r.add(ViolationKind::CELL_CLOSURE, {u}, d.v.at(u, u), u, "d0:v-idem");
    }
  }
  r.finalize();
  return r;
}

inline CellDecomposition derive_cells(const DoubleStructure& d) {
  require_valid(d);
  CellDecomposition c;
  c.d1v = detail::fixed_points(d.h.s);
  c.d1h = detail::fixed_points(d.v.s);
  for (int x = 0; x < d.n; ++x)
    if (d.h.s[x] == x && d.h.t[x] == x && d.v.s[x] == x && d.v.t[x] == x)
      c.d0.push_back(x);
  auto audit = check_cell_properties(d, c);
  if (!audit.valid())
    throw std::logic_error("cell decomposition audit failed on a valid input");
  return c;
}

struct ExchangeWitness {
  int x, y, w, z;
  int lhs, rhs;
};

/// Streams every quadruple on which both sides of the exchange law are
/// defined, with both computed values, in lexicographic (x,y,w,z) order.
inline std::vector<ExchangeWitness> exchange_witnesses(const DoubleStructure& d) {
  require_components_valid(d);
  std::vector<ExchangeWitness> out;
  const int n = d.n;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int w = 0; w < n; ++w)
        for (int z = 0; z < n; ++z) {
          const int xw = d.v.at(x, w);
          const int yz = d.v.at(y, z);
          const int xy = d.h.at(x, y);
          const int wz = d.h.at(w, z);
          const int lhs = (xw != kUndefined && yz != kUndefined)
                              ? d.h.at(xw, yz)
                              : kUndefined;
          const int rhs = (xy != kUndefined && wz != kUndefined)
                              ? d.v.at(xy, wz)
                              : kUndefined;
          if (lhs != kUndefined && rhs != kUndefined)
            out.push_back({x, y, w, z, lhs, rhs});
        }
  return out;
}

enum class TwoCatOrdering { HV, VH };  // which structure plays role 1

/// 2-category test: with structure 1 = `first` and structure 2 = the other,
/// s1 = s1.s2 = s1.t2 and t1 = t1.t2 = t1.s2 as maps, and im(s1) = im(t1)
/// = d0.
inline ValidationReport detect_two_category(const DoubleStructure& d,
                                            TwoCatOrdering ordering) {
  auto cells = derive_cells(d);  // also enforces validity
  const PartialMonoidStructure& one = ordering == TwoCatOrdering::HV ? d.h : d.v;
  const PartialMonoidStructure& two = ordering == TwoCatOrdering::HV ? d.v : d.h;
  ValidationReport r;
  for (int x = 0; x < d.n; ++x) {
    if (one.s[two.s[x]] != one.s[x])
      r.add(ViolationKind::TWO_CAT_IDENTITY, {x}, one.s[two.s[x]], one.s[x], "s1.s2");
    if (one.s[two.t[x]] != one.s[x])
      r.add(ViolationKind::TWO_CAT_IDENTITY, {x}, one.s[two.t[x]], one.s[x], "s1.t2");
    if (one.t[two.t[x]] != one.t[x])
      r.add(ViolationKind::TWO_CAT_IDENTITY, {x}, one.t[two.t[x]], one.t[x], "t1.t2");
    if (one.t[two.s[x]] != one.t[x])
      r.add(ViolationKind::TWO_CAT_IDENTITY, {x}, one.t[two.s[x]], one.t[x], "t1.s2");
  }
  std::set<int> im_s(one.s.begin(), one.s.end());
  std::set<int> im_t(one.t.begin(), one.t.end());
  std::set<int> d0(cells.d0.begin(), cells.d0.end());
  for (int x = 0; x < d.n; ++x) {
    const bool in_s = im_s.count(x) > 0;
    const bool in_t = im_t.count(x) > 0;
    const bool in_0 = d0.count(x) > 0;
    if (in_s != in_0)
      r.add(ViolationKind::TWO_CAT_IMAGE, {x}, kUndefined, kUndefined, "im(s1)");
    if (in_t != in_0)
      r.add(ViolationKind::TWO_CAT_IMAGE, {x}, kUndefined, kUndefined, "im(t1)");
  }
  r.finalize();
  return r;
}

/// One-object test: all eight two-fold identity-map composites are constant
/// with one common value; cross-checked against |d0| = 1.
inline ValidationReport detect_one_object(const DoubleStructure& d) {
  auto cells = derive_cells(d);
  ValidationReport r;
  const std::vector<std::pair<std::string, std::pair<const std::vector<int>*,
                                                     const std::vector<int>*>>>
      composites = {
          {"sh.sv", {&d.h.s, &d.v.s}}, {"sv.sh", {&d.v.s, &d.h.s}},
          {"th.tv", {&d.h.t, &d.v.t}}, {"tv.th", {&d.v.t, &d.h.t}},
          {"th.sv", {&d.h.t, &d.v.s}}, {"sv.th", {&d.v.s, &d.h.t}},
          {"sh.tv", {&d.h.s, &d.v.t}}, {"tv.sh", {&d.v.t, &d.h.s}},
      };
  std::optional<int> common;
  for (const auto& [name, maps] : composites)
    for (int x = 0; x < d.n; ++x) {
      const int val = (*maps.first)[(*maps.second)[x]];
      if (!common) common = val;
      if (val != *common)
        r.add(ViolationKind::NOT_ONE_OBJECT, {x}, val, *common, name);
    }
  r.finalize();
  if (r.valid() != (cells.d0.size() == 1))
    throw std::logic_error(
        "one-object characterizations disagree on a valid input");
  return r;
}

}  // namespace pamono
