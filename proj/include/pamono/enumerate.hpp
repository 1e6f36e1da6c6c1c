#pragma once

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "pamono/core.hpp"
#include "pamono/double_structure.hpp"

namespace pamono {

enum class EnumMode { PM, DOUBLE };
enum class Dedup { LABELLED, UP_TO_ISO };
enum class Emit { COUNT_ONLY, STREAM };

struct EnumerationRequest {
  int k = 1;
  EnumMode mode = EnumMode::PM;
  Dedup dedup = Dedup::LABELLED;
  Emit emit = Emit::STREAM;
  int workers = 1;
  bool disable_pruning = false;  // debug: same output set, slower
};

struct EnumerationResult {
  long long count = 0;
  std::vector<PartialMonoidStructure> pms;      // PM mode, STREAM only
  std::vector<DoubleStructure> doubles;         // DOUBLE mode, STREAM only
  std::chrono::duration<double> elapsed{};
};

namespace detail {

inline int enum_cap(int default_cap) {
  if (const char* env = std::getenv("PAMONO_MAX_CARRIER")) {
    const int v = std::atoi(env);
    if (v > default_cap) return v;
  }
  return default_cap;
}

// Canonical byte encoding: s, t, then op row-major with UNDEFINED below e0.
inline std::vector<int> encode(const PartialMonoidStructure& p) {
  std::vector<int> e;
  e.reserve(2 * p.n + p.op.size());
  e.insert(e.end(), p.s.begin(), p.s.end());
  e.insert(e.end(), p.t.begin(), p.t.end());
  for (int v : p.op) e.push_back(v + 1);  // kUndefined -> 0
  return e;
}

inline std::vector<int> encode(const DoubleStructure& d) {
  auto e = encode(d.h);
  const auto ev = encode(d.v);
  e.insert(e.end(), ev.begin(), ev.end());
  return e;
}

inline PartialMonoidStructure relabel(const PartialMonoidStructure& p,
                                      const std::vector<int>& perm) {
  PartialMonoidStructure q{p.n, std::vector<int>(p.n), std::vector<int>(p.n),
                           std::vector<int>(p.op.size(), kUndefined)};
  for (int x = 0; x < p.n; ++x) {
    q.s[perm[x]] = perm[p.s[x]];
    q.t[perm[x]] = perm[p.t[x]];
    for (int y = 0; y < p.n; ++y) {
      const int v = p.at(x, y);
      q.at(perm[x], perm[y]) = v == kUndefined ? kUndefined : perm[v];
    }
  }
  return q;
}

template <class Structure, class Relabel>
bool is_canonical_form(const Structure& st, int n, Relabel relabel_fn) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  const auto own = encode(st);
  while (std::next_permutation(perm.begin(), perm.end()))
    if (encode(relabel_fn(st, perm)) < own) return false;
  return true;
}

inline std::vector<std::vector<int>> idempotent_maps(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> f(n, 0);
  while (true) {
    bool idem = true;
    for (int x = 0; x < n && idem; ++x) idem = f[f[x]] == f[x];
    if (idem) out.push_back(f);
    int i = n - 1;
    while (i >= 0 && f[i] == n - 1) f[i--] = 0;
    if (i < 0) break;
    ++f[i];
  }
  return out;
}

// Backtracking fill of the op table over the support {(x,y): s(x)=t(y)}.
// Unit laws force whole rows/columns; associativity is re-checked on the
// fully determined triples after each assignment unless pruning is off.
struct PmSearch {
  const int n;
  const std::vector<int>& s;
  const std::vector<int>& t;
  bool prune;
  PartialMonoidStructure work;
  std::vector<std::pair<int, int>> free_cells;
  std::vector<PartialMonoidStructure>* out;

  PmSearch(int n_, const std::vector<int>& s_, const std::vector<int>& t_,
           bool prune_, std::vector<PartialMonoidStructure>* out_)
      : n(n_), s(s_), t(t_), prune(prune_), out(out_) {
    work = {n, s, t, std::vector<int>(static_cast<size_t>(n) * n, kUndefined)};
  }

  // returns false when forced unit entries conflict
  bool apply_forced() {
    if (!prune) return true;
    auto force = [&](int x, int y, int v) {
      if (s[x] != t[y]) return false;  // unit law needs a cell off-support
      int& cell = work.at(x, y);
      if (cell != kUndefined && cell != v) return false;
      cell = v;
      return true;
    };
    for (int x = 0; x < n; ++x) {
      if (!force(x, s[x], x)) return false;
      if (!force(t[x], x, x)) return false;
    }
    return true;
  }

  void collect_free() {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (s[x] == t[y] && work.at(x, y) == kUndefined)
          free_cells.emplace_back(x, y);
  }

  // Check every associativity triple that is fully determined so far; a
  // support cell still unassigned makes the triple undetermined.
  bool partial_assoc_ok() const {
    auto val = [&](int x, int y, bool& known) {
      if (s[x] != t[y]) return kUndefined;
      const int v = work.at(x, y);
      if (v == kUndefined) known = false;
      return v;
    };
    for (int z = 0; z < n; ++z)
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
          bool known = true;
          const int xy = val(x, y, known);
          int lhs = kUndefined;
          if (known && xy != kUndefined) lhs = val(z, xy, known);
          const int zx = val(z, x, known);
          int rhs = kUndefined;
          if (known && zx != kUndefined) rhs = val(zx, y, known);
          if (!known) continue;
          if ((lhs != kUndefined || rhs != kUndefined) && lhs != rhs)
            return false;
        }
    return true;
  }

  void run() {
    if (!apply_forced()) return;
    collect_free();
    descend(0);
  }

  void descend(size_t i) {
    if (i == free_cells.size()) {
      if (validate_structure(work).valid()) out->push_back(work);
      return;
    }
    auto [x, y] = free_cells[i];
    for (int v = 0; v < n; ++v) {
      work.at(x, y) = v;
      if (!prune || partial_assoc_ok()) descend(i + 1);
    }
    work.at(x, y) = kUndefined;
  }
};

}  // namespace detail

/// All labelled partial monoids on k elements, in canonical order
/// (lexicographic over s, t, then the op table with UNDEFINED < e0).
inline EnumerationResult enumerate_pm(const EnumerationRequest& req) {
  if (req.k < 1) throw std::invalid_argument("enumerate_pm: k >= 1 required");
  if (req.k > detail::enum_cap(5))
    throw std::invalid_argument("enumerate_pm: carrier size above the cap");
  const auto start = std::chrono::steady_clock::now();
  const auto idem = detail::idempotent_maps(req.k);
  std::vector<std::pair<int, int>> roots;
  for (int i = 0; i < static_cast<int>(idem.size()); ++i)
    for (int j = 0; j < static_cast<int>(idem.size()); ++j)
      roots.emplace_back(i, j);

  const int workers = std::max(1, req.workers);
  std::vector<std::vector<PartialMonoidStructure>> found(workers);
  auto job = [&](int w) {
    for (size_t r = w; r < roots.size(); r += workers) {
      detail::PmSearch search(req.k, idem[roots[r].first], idem[roots[r].second],
                              !req.disable_pruning, &found[w]);
      search.run();
    }
  };
  if (workers == 1) {
    job(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(job, w);
    for (auto& th : pool) th.join();
  }

  std::vector<PartialMonoidStructure> all;
  for (auto& v : found)
    for (auto& p : v) all.push_back(std::move(p));
  std::sort(all.begin(), all.end(),
            [](const PartialMonoidStructure& a, const PartialMonoidStructure& b) {
              return detail::encode(a) < detail::encode(b);
            });
  if (req.dedup == Dedup::UP_TO_ISO) {
    std::erase_if(all, [&](const PartialMonoidStructure& p) {
      return !detail::is_canonical_form(
          p, p.n, [](const PartialMonoidStructure& q, const std::vector<int>& perm) {
            return detail::relabel(q, perm);
          });
    });
  }
  EnumerationResult res;
  res.count = static_cast<long long>(all.size());
  if (req.emit == Emit::STREAM) res.pms = std::move(all);
  res.elapsed = std::chrono::steady_clock::now() - start;
  return res;
}

/// All labelled pairs (h, v) of partial monoids on one carrier that form a
/// valid double structure, canonical order over the concatenated encodings.
inline EnumerationResult enumerate_double(const EnumerationRequest& req) {
  if (req.k < 1) throw std::invalid_argument("enumerate_double: k >= 1 required");
  if (req.k > detail::enum_cap(3))
    throw std::invalid_argument("enumerate_double: carrier size above the cap");
  const auto start = std::chrono::steady_clock::now();
  EnumerationRequest pm_req = req;
  pm_req.mode = EnumMode::PM;
  pm_req.dedup = Dedup::LABELLED;
  pm_req.emit = Emit::STREAM;
  const auto pms = enumerate_pm(pm_req).pms;

  const int workers = std::max(1, req.workers);
  std::vector<std::vector<DoubleStructure>> found(workers);
  auto job = [&](int w) {
    for (size_t i = w; i < pms.size(); i += workers)
      for (size_t j = 0; j < pms.size(); ++j) {
        DoubleStructure d{req.k, pms[i], pms[j]};
        if (validate_double(d).valid()) found[w].push_back(std::move(d));
      }
  };
  if (workers == 1) {
    job(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(job, w);
    for (auto& th : pool) th.join();
  }

  std::vector<DoubleStructure> all;
  for (auto& v : found)
    for (auto& d : v) all.push_back(std::move(d));
  std::sort(all.begin(), all.end(),
            [](const DoubleStructure& a, const DoubleStructure& b) {
              return detail::encode(a) < detail::encode(b);
            });
  if (req.dedup == Dedup::UP_TO_ISO) {
    std::erase_if(all, [&](const DoubleStructure& d) {
      return !detail::is_canonical_form(
          d, d.n, [](const DoubleStructure& q, const std::vector<int>& perm) {
            return DoubleStructure{q.n, detail::relabel(q.h, perm),
                                   detail::relabel(q.v, perm)};
          });
    });
  }
  EnumerationResult res;
  res.count = static_cast<long long>(all.size());
  if (req.emit == Emit::STREAM) res.doubles = std::move(all);
  res.elapsed = std::chrono::steady_clock::now() - start;
  return res;
}

inline EnumerationResult enumerate(const EnumerationRequest& req) {
  return req.mode == EnumMode::PM ? enumerate_pm(req) : enumerate_double(req);
}

/// All labelled monoid tables of order n (total, associative, with a
/// two-sided unit in any position). Used by the Eckmann-Hilton checks.
inline std::vector<std::vector<int>> enumerate_monoid_tables(int n) {
  if (n < 1 || n > 4)
    throw std::invalid_argument("enumerate_monoid_tables: 1 <= n <= 4");
  std::vector<std::vector<int>> out;
  for (int e = 0; e < n; ++e) {
    std::vector<int> table(static_cast<size_t>(n) * n, kUndefined);
    for (int x = 0; x < n; ++x) table[e * n + x] = table[x * n + e] = x;
    std::vector<std::pair<int, int>> cells;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (x != e && y != e) cells.emplace_back(x, y);
    auto at = [&](int x, int y) { return table[x * n + y]; };
    auto assoc_so_far = [&]() {
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          for (int z = 0; z < n; ++z) {
            const int yz = at(y, z);
            const int xy = at(x, y);
            if (yz == kUndefined || xy == kUndefined) continue;
            const int l = at(x, yz);
            const int r = at(xy, z);
            if (l == kUndefined || r == kUndefined) continue;
            if (l != r) return false;
          }
      return true;
    };
    std::function<void(size_t)> fill = [&](size_t i) {
      if (i == cells.size()) {
        // keep only tables whose unit really is e and no smaller unit exists
        // elsewhere; every two-sided unit is unique, so no dedup is needed
        out.push_back(table);
        return;
      }
      auto [x, y] = cells[i];
      for (int v = 0; v < n; ++v) {
        table[x * n + y] = v;
        if (assoc_so_far()) fill(i + 1);
      }
      table[x * n + y] = kUndefined;
    };
    fill(0);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace pamono
