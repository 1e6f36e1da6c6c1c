#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pamono/core.hpp"

namespace pamono {

/// A total map between two carriers; candidate homomorphism.
struct CarrierMap {
  int source_n = 0;
  int target_n = 0;
  std::vector<int> image;  // size source_n, values < target_n

  int operator()(int x) const { return image[x]; }

  static CarrierMap identity(int n) {
    CarrierMap f{n, n, std::vector<int>(n)};
    for (int i = 0; i < n; ++i) f.image[i] = i;
    return f;
  }

  friend bool operator==(const CarrierMap& a, const CarrierMap& b) {
    return a.source_n == b.source_n && a.target_n == b.target_n &&
           a.image == b.image;
  }
};

inline void require_well_formed(const CarrierMap& f) {
  if (f.image.size() != static_cast<size_t>(f.source_n))
    throw std::invalid_argument("carrier map: wrong length");
  for (int e : f.image)
    if (e < 0 || e >= f.target_n)
      throw std::invalid_argument("carrier map: image index out of range");
}

/// Checks the three homomorphism conditions:
///   H1  F(x *1 y) = F(x) *2 F(y) for every defined x *1 y
///   H2  F(s1(x)) = s2(F(x))
///   H3  F(t1(x)) = t2(F(x))
/// H1 quantifies over defined composites only; F(x) *2 F(y) may be defined
/// when x *1 y is not.
inline ValidationReport check_homomorphism(const PartialMonoidStructure& p1,
                                           const PartialMonoidStructure& p2,
                                           const CarrierMap& f) {
  require_valid(p1);
  require_valid(p2);
  require_well_formed(f);
  if (f.source_n != p1.n || f.target_n != p2.n)
    throw std::invalid_argument("carrier map does not match the structures");
  ValidationReport r;
  for (int x = 0; x < p1.n; ++x)
    for (int y = 0; y < p1.n; ++y) {
      const int xy = p1.at(x, y);
      if (xy == kUndefined) continue;
      const int rhs = p2.at(f(x), f(y));
      if (rhs != f(xy)) r.add(ViolationKind::HOM_COMP, {x, y}, f(xy), rhs);
    }
  for (int x = 0; x < p1.n; ++x) {
    if (f(p1.s[x]) != p2.s[f(x)])
      r.add(ViolationKind::HOM_S, {x}, f(p1.s[x]), p2.s[f(x)]);
    if (f(p1.t[x]) != p2.t[f(x)])
      r.add(ViolationKind::HOM_T, {x}, f(p1.t[x]), p2.t[f(x)]);
  }
  r.finalize();
  return r;
}

/// Pointwise composite x -> G(F(x)).
inline CarrierMap compose_maps(const CarrierMap& f, const CarrierMap& g) {
  require_well_formed(f);
  require_well_formed(g);
  if (f.target_n != g.source_n)
    throw std::invalid_argument("compose_maps: size mismatch");
  CarrierMap h{f.source_n, g.target_n, std::vector<int>(f.source_n)};
  for (int x = 0; x < f.source_n; ++x) h.image[x] = g(f(x));
  return h;
}

namespace detail {

// Isomorphism-invariant per-element fingerprint used to prune the
// bijection search.
inline std::array<int, 4> iso_signature(const PartialMonoidStructure& p, int x) {
  int out = 0, in = 0;
  for (int y = 0; y < p.n; ++y) {
    if (p.defined(x, y)) ++out;
    if (p.defined(y, x)) ++in;
  }
  return {p.s[x] == x ? 1 : 0, p.t[x] == x ? 1 : 0, out, in};
}

inline bool iso_extend(const PartialMonoidStructure& p1,
                       const PartialMonoidStructure& p2, std::vector<int>& f,
                       std::vector<bool>& used, int x,
                       const std::vector<std::array<int, 4>>& sig1,
                       const std::vector<std::array<int, 4>>& sig2) {
  const int n = p1.n;
  if (x == n) return true;
  for (int c = 0; c < n; ++c) {
    if (used[c] || sig1[x] != sig2[c]) continue;
    // consistency with everything assigned so far
    bool ok = true;
    f[x] = c;
    for (int y = 0; y <= x && ok; ++y) {
      if (p1.s[y] <= x && f[p1.s[y]] != p2.s[f[y]]) ok = false;
      if (p1.t[y] <= x && f[p1.t[y]] != p2.t[f[y]]) ok = false;
      for (int d = 0; d <= x && ok; ++d) {
        for (auto [a, b] : {std::pair{y, d}, std::pair{d, y}}) {
          const int ab = p1.at(a, b);
          const int fab = p2.at(f[a], f[b]);
          if ((ab == kUndefined) != (fab == kUndefined)) ok = false;
          else if (ab != kUndefined && ab <= x && f[ab] != fab) ok = false;
        }
      }
    }
    if (!ok) {
      f[x] = kUndefined;
      continue;
    }
    used[c] = true;
    if (iso_extend(p1, p2, f, used, x + 1, sig1, sig2)) return true;
    used[c] = false;
    f[x] = kUndefined;
  }
  return false;
}

}  // namespace detail

/// Decides isomorphism by backtracking over bijections, smallest image
/// first, so a returned witness is the lexicographically least one.
inline std::pair<bool, std::optional<CarrierMap>> are_isomorphic(
    const PartialMonoidStructure& p1, const PartialMonoidStructure& p2) {
  require_valid(p1);
  require_valid(p2);
  if (p1.n != p2.n) return {false, std::nullopt};
  const int n = p1.n;
  std::vector<std::array<int, 4>> sig1(n), sig2(n);
  for (int x = 0; x < n; ++x) {
    sig1[x] = detail::iso_signature(p1, x);
    sig2[x] = detail::iso_signature(p2, x);
  }
  {
    auto a = sig1, b = sig2;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return {false, std::nullopt};
  }
  std::vector<int> f(n, kUndefined);
  std::vector<bool> used(n, false);
  if (!detail::iso_extend(p1, p2, f, used, 0, sig1, sig2))
    return {false, std::nullopt};
  return {true, CarrierMap{n, n, f}};
}

}  // namespace pamono
