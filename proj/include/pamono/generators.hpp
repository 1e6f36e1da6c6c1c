#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "pamono/core.hpp"
#include "pamono/double_structure.hpp"
#include "pamono/nfold.hpp"

namespace pamono {

/// A classical small-category presentation: objects carry names, morphisms
/// have src/tgt objects, identities are picked out explicitly, and comp is
/// keyed (g, f) on matching pairs.
struct CategoryPresentation {
  std::vector<std::string> objects;
  std::vector<std::string> morphisms;
  std::vector<int> src;       // morphism -> object
  std::vector<int> tgt;       // morphism -> object
  std::vector<int> identity;  // object -> morphism
  std::map<std::pair<int, int>, int> comp;  // (g, f) with tgt(f) = src(g)

  int n_obj() const { return static_cast<int>(objects.size()); }
  int n_mor() const { return static_cast<int>(morphisms.size()); }
};

inline void require_valid(const CategoryPresentation& c) {
  const int no = c.n_obj();
  const int nm = c.n_mor();
  if (c.src.size() != static_cast<size_t>(nm) ||
      c.tgt.size() != static_cast<size_t>(nm) ||
      c.identity.size() != static_cast<size_t>(no))
    throw std::invalid_argument("category: table lengths do not match");
  for (int f = 0; f < nm; ++f)
    if (c.src[f] < 0 || c.src[f] >= no || c.tgt[f] < 0 || c.tgt[f] >= no)
      throw std::invalid_argument("category: src/tgt out of range");
  for (int a = 0; a < no; ++a) {
    const int i = c.identity[a];
    if (i < 0 || i >= nm || c.src[i] != a || c.tgt[i] != a)
      throw std::invalid_argument("category: identity(A) must be an endo of A");
  }
  // comp defined exactly on matching pairs
  for (int g = 0; g < nm; ++g)
    for (int f = 0; f < nm; ++f) {
      auto it = c.comp.find({g, f});
      const bool matching = c.tgt[f] == c.src[g];
      if (matching != (it != c.comp.end()))
        throw std::invalid_argument("category: comp support mismatch");
      if (it != c.comp.end()) {
        const int gf = it->second;
        if (gf < 0 || gf >= nm)
          throw std::invalid_argument("category: comp value out of range");
        if (c.src[gf] != c.src[f] || c.tgt[gf] != c.tgt[g])
          throw std::invalid_argument("category: comp endpoints wrong");
      }
    }
  // unit and associativity laws
  for (int f = 0; f < nm; ++f) {
    if (c.comp.at({f, c.identity[c.src[f]]}) != f ||
        c.comp.at({c.identity[c.tgt[f]], f}) != f)
      throw std::invalid_argument("category: unit law fails");
  }
  for (int h = 0; h < nm; ++h)
    for (int g = 0; g < nm; ++g)
      for (int f = 0; f < nm; ++f) {
        if (c.tgt[f] != c.src[g] || c.tgt[g] != c.src[h]) continue;
        if (c.comp.at({h, c.comp.at({g, f})}) !=
            c.comp.at({c.comp.at({h, g}), f}))
          throw std::invalid_argument("category: associativity fails");
      }
}

/// Squares over an m-point set, corners (A,B,C,D) read top-left, top-right,
/// bottom-left, bottom-right. s_v keeps the top edge, t_v the bottom; s_h
/// the left edge, t_h the right. Vertical composition stacks the other
/// square on top, horizontal glues it on the left.
inline DoubleStructure pair_double_groupoid(int m) {
  if (m < 1) throw std::invalid_argument("pair_double_groupoid: need m >= 1");
  const long long nll = 1ll * m * m * m * m;
  const int n = static_cast<int>(nll);
  auto idx = [m](int a, int b, int c, int d) {
    return ((a * m + b) * m + c) * m + d;
  };
  struct Sq { int a, b, c, d; };
  std::vector<Sq> sq(n);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c)
        for (int d = 0; d < m; ++d) sq[idx(a, b, c, d)] = {a, b, c, d};

  PartialMonoidStructure h{n, std::vector<int>(n), std::vector<int>(n),
                           std::vector<int>(static_cast<size_t>(n) * n, kUndefined)};
  PartialMonoidStructure v = h;
  for (int x = 0; x < n; ++x) {
    const auto& q = sq[x];
    v.s[x] = idx(q.a, q.b, q.a, q.b);
    v.t[x] = idx(q.c, q.d, q.c, q.d);
    h.s[x] = idx(q.a, q.a, q.c, q.c);
    h.t[x] = idx(q.b, q.b, q.d, q.d);
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const auto& qx = sq[x];
      const auto& qy = sq[y];
      if (qx.a == qy.c && qx.b == qy.d)  // s_v(x) = t_v(y): stack y above x
        v.at(x, y) = idx(qy.a, qy.b, qx.c, qx.d);
      if (qx.a == qy.b && qx.c == qy.d)  // s_h(x) = t_h(y): glue y on the left
        h.at(x, y) = idx(qy.a, qx.b, qy.c, qx.d);
    }
  return {n, h, v};
}

/// Lifts a total monoid table to a partial monoid: s = t = const unit.
/// The unit is located in the table; missing unit or broken associativity
/// is rejected.
inline PartialMonoidStructure monoid_to_pm(const std::vector<int>& table, int n) {
  if (n < 1 || table.size() != static_cast<size_t>(n) * n)
    throw std::invalid_argument("monoid table: wrong size");
  for (int v : table)
    if (v < 0 || v >= n) throw std::invalid_argument("monoid table: bad entry");
  auto at = [&](int x, int y) { return table[x * n + y]; };
  int unit = kUndefined;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      ok = at(e, x) == x && at(x, e) == x;
    if (ok) { unit = e; break; }  // two-sided units are unique
  }
  if (unit == kUndefined)
    throw std::invalid_argument("monoid table: no two-sided unit");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (at(x, at(y, z)) != at(at(x, y), z))
          throw std::invalid_argument("monoid table: not associative");
  PartialMonoidStructure p{n, std::vector<int>(n, unit),
                           std::vector<int>(n, unit), table};
  return p;
}

/// Doubles a monoid: both structures are the same lift. validate_double on
/// the result is empty exactly when the table commutes (the exchange check
/// does the work; commutativity is not assumed here).
inline DoubleStructure commutative_monoid_double(const std::vector<int>& table,
                                                 int n) {
  auto p = monoid_to_pm(table, n);
  return {n, p, p};
}

/// k-dimensional cubes over an m-point set: the carrier is X^(2^k) indexed
/// by cube vertices in {0,1}^k, axis i reads bit i of the vertex. s_i/t_i
/// copy the 0/1 face of axis i onto both faces; composition along axis i
/// glues when the facing sides match.
inline MultiStructure ncube_pair_groupoid(int m, int k, long long cap = 4096) {
  if (m < 1 || k < 1 || k > 4)
    throw std::invalid_argument("ncube_pair_groupoid: need m >= 1, 1 <= k <= 4");
  const int verts = 1 << k;
  long long nll = 1;
  for (int i = 0; i < verts; ++i) {
    nll *= m;
    if (nll > cap)
      throw std::invalid_argument("ncube_pair_groupoid: carrier above the cap");
  }
  const int n = static_cast<int>(nll);
  // element x -> vertex labelling; vertex p is a digit, most significant first
  auto digit = [&](int x, int p) {
    for (int q = verts - 1; q > p; --q) x /= m;
    return x % m;
  };
  MultiStructure ms;
  ms.n = n;
  for (int axis = 0; axis < k; ++axis) {
    PartialMonoidStructure p{n, std::vector<int>(n), std::vector<int>(n),
                             std::vector<int>(static_cast<size_t>(n) * n,
                                              kUndefined)};
    const int bit = 1 << axis;
    for (int x = 0; x < n; ++x) {
      int s_val = 0, t_val = 0;
      for (int pv = 0; pv < verts; ++pv) {
        s_val = s_val * m + digit(x, pv & ~bit);
        t_val = t_val * m + digit(x, pv | bit);
      }
      p.s[x] = s_val;
      p.t[x] = t_val;
    }
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        // x *_i y glues y onto the 0-side: need 0-face of x = 1-face of y
        bool match = true;
        for (int pv = 0; pv < verts && match; ++pv)
          if (!(pv & bit)) match = digit(x, pv) == digit(y, pv | bit);
        if (!match) continue;
        int val = 0;
        for (int pv = 0; pv < verts; ++pv)
          val = val * m + ((pv & bit) ? digit(x, pv) : digit(y, pv));
        p.at(x, y) = val;
      }
    ms.structures.push_back(std::move(p));
    ms.axis_names.push_back("a" + std::to_string(axis));
  }
  return ms;
}

/// Carrier = morphisms; s(x) = identity(src x), t(x) = identity(tgt x).
inline PartialMonoidStructure category_to_pm(const CategoryPresentation& c) {
  require_valid(c);
  const int n = c.n_mor();
  PartialMonoidStructure p{n, std::vector<int>(n), std::vector<int>(n),
                           std::vector<int>(static_cast<size_t>(n) * n,
                                            kUndefined)};
  for (int f = 0; f < n; ++f) {
    p.s[f] = c.identity[c.src[f]];
    p.t[f] = c.identity[c.tgt[f]];
  }
  for (const auto& [key, gf] : c.comp) p.at(key.first, key.second) = gf;
  return p;
}

/// Objects emerge as the units of P; object names reuse the unit element
/// names (here, indices). The morphism-level round trip with category_to_pm
/// is exact; original object labels are not recoverable in general.
inline CategoryPresentation pm_to_category(
    const PartialMonoidStructure& p,
    const std::vector<std::string>& names = {}) {
  require_valid(p);
  auto name_of = [&](int x) {
    return x < static_cast<int>(names.size()) ? names[x]
                                              : "e" + std::to_string(x);
  };
  CategoryPresentation c;
  const auto us = units(p);
  std::vector<int> obj_of(p.n, -1);
  for (int u : us) {
    obj_of[u] = c.n_obj();
    c.objects.push_back(name_of(u));
    c.identity.push_back(u);
  }
  for (int x = 0; x < p.n; ++x) {
    c.morphisms.push_back(name_of(x));
    c.src.push_back(obj_of[p.s[x]]);
    c.tgt.push_back(obj_of[p.t[x]]);
  }
  for (int g = 0; g < p.n; ++g)
    for (int f = 0; f < p.n; ++f)
      if (p.defined(g, f)) c.comp[{g, f}] = p.at(g, f);
  require_valid(c);
  return c;
}

}  // namespace pamono
