#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "pamono/double_structure.hpp"

namespace pamono {

/// One carrier with k >= 1 partial monoid structures.
struct MultiStructure {
  int n = 0;
  std::vector<PartialMonoidStructure> structures;
  std::vector<std::string> axis_names;  // same length as structures

  int k() const { return static_cast<int>(structures.size()); }

  static MultiStructure from_double(const DoubleStructure& d) {
    return {d.n, {d.h, d.v}, {"h", "v"}};
  }
};

inline void require_well_formed(const MultiStructure& m) {
  if (m.structures.empty())
    throw std::invalid_argument("multi structure: need at least one structure");
  if (m.axis_names.size() != m.structures.size())
    throw std::invalid_argument("multi structure: axis names mismatch");
  for (const auto& p : m.structures) {
    if (p.n != m.n)
      throw std::invalid_argument("multi structure: carriers do not match");
    require_well_formed(p);
  }
}

/// Every structure is a partial monoid, and every pair satisfies the double
/// conditions D2-D4. For k = 2 this reproduces validate_double exactly.
inline ValidationReport validate_nfold(const MultiStructure& m) {
  require_well_formed(m);
  ValidationReport r;
  for (int i = 0; i < m.k(); ++i)
    for (auto& viol : validate_structure(m.structures[i]).violations) {
      auto v2 = viol;
      v2.where = v2.where.empty() ? m.axis_names[i]
                                  : m.axis_names[i] + ":" + v2.where;
      r.violations.push_back(std::move(v2));
    }
  for (int i = 0; i < m.k(); ++i)
    for (int j = i + 1; j < m.k(); ++j)
      detail::append_pair_conditions(m.structures[i], m.structures[j],
                                     m.axis_names[i], m.axis_names[j], r);
  r.finalize();
  return r;
}

inline void require_valid(const MultiStructure& m) {
  if (!validate_nfold(m).valid())
    throw std::invalid_argument("not a valid n-fold structure");
}

/// Cells indexed by axis subsets: cell(S) is the common fixed-point set of
/// every s_i, t_i with i in S. 2^k entries, monotone decreasing in S.
struct CellLattice {
  int k = 0;
  std::vector<std::vector<int>> cells;  // indexed by subset bitmask

  const std::vector<int>& cell(unsigned mask) const { return cells[mask]; }
};

inline CellLattice cell_lattice(const MultiStructure& m, int max_k = 6) {
  require_valid(m);
  if (m.k() > max_k)
    throw std::invalid_argument("cell_lattice: axis count above the cap");
  CellLattice lat;
  lat.k = m.k();
  const unsigned total = 1u << m.k();
  lat.cells.resize(total);
  for (unsigned mask = 0; mask < total; ++mask) {
    for (int x = 0; x < m.n; ++x) {
      bool fixed = true;
      for (int i = 0; i < m.k() && fixed; ++i)
        if (mask & (1u << i))
          fixed = m.structures[i].s[x] == x && m.structures[i].t[x] == x;
      if (fixed) lat.cells[mask].push_back(x);
    }
  }
  // monotonicity audit: adding an axis can only shrink the cell
  for (unsigned mask = 0; mask < total; ++mask)
    for (int i = 0; i < m.k(); ++i) {
      const unsigned super = mask | (1u << i);
      if (super == mask) continue;
      for (int x : lat.cells[super]) {
        bool found = std::binary_search(lat.cells[mask].begin(),
                                        lat.cells[mask].end(), x);
        if (!found)
          throw std::logic_error("cell lattice monotonicity audit failed");
      }
    }
  return lat;
}

}  // namespace pamono
