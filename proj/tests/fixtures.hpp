#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "pamono/core.hpp"
#include "pamono/generators.hpp"

namespace fixtures {

using pamono::kUndefined;
using pamono::PartialMonoidStructure;

// the one-element (terminal) category
inline PartialMonoidStructure trivial() {
  return {1, {0}, {0}, {0}};
}

// Z/2 as a partial monoid: carrier {e, a}, unit e = 0
inline std::vector<int> z2_table() { return {0, 1, 1, 0}; }

inline PartialMonoidStructure z2() {
  return pamono::monoid_to_pm(z2_table(), 2);
}

// idempotent 2-element monoid {e, a} with a*a = a
inline std::vector<int> idem2_table() { return {0, 1, 1, 1}; }

inline PartialMonoidStructure idem2() {
  return pamono::monoid_to_pm(idem2_table(), 2);
}

// Klein four-group, x*y = x xor y
inline std::vector<int> klein4_table() {
  std::vector<int> t(16);
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) t[x * 4 + y] = x ^ y;
  return t;
}

// S3: permutations of {0,1,2} in lexicographic order, composed apply-right-first
inline std::vector<int> s3_table() {
  std::vector<std::vector<int>> perms;
  std::vector<int> p{0, 1, 2};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::vector<int> table(36);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      std::vector<int> comp(3);
      for (int x = 0; x < 3; ++x) comp[x] = perms[i][perms[j][x]];
      table[i * 6 + j] = static_cast<int>(
          std::find(perms.begin(), perms.end(), comp) - perms.begin());
    }
  return table;
}

// interval category {id_A = 0, id_B = 1, f = 2} with f : A -> B
inline PartialMonoidStructure interval() {
  PartialMonoidStructure p{3, {0, 1, 0}, {0, 1, 1},
                           std::vector<int>(9, kUndefined)};
  p.at(0, 0) = 0;
  p.at(1, 1) = 1;
  p.at(2, 0) = 2;
  p.at(1, 2) = 2;
  return p;
}

inline pamono::CategoryPresentation interval_category() {
  pamono::CategoryPresentation c;
  c.objects = {"A", "B"};
  c.morphisms = {"idA", "idB", "f"};
  c.src = {0, 1, 0};
  c.tgt = {0, 1, 1};
  c.identity = {0, 1};
  c.comp[{0, 0}] = 0;
  c.comp[{1, 1}] = 1;
  c.comp[{2, 0}] = 2;
  c.comp[{1, 2}] = 2;
  return c;
}

// s is a transposition (not idempotent); op left empty
inline PartialMonoidStructure broken_transposition() {
  return {2, {1, 0}, {0, 1}, std::vector<int>(4, kUndefined)};
}

// discrete 2-element structure plus one off-support defined cell
inline PartialMonoidStructure broken_off_support() {
  PartialMonoidStructure p{2, {0, 1}, {0, 1}, std::vector<int>(4, kUndefined)};
  p.at(0, 0) = 0;
  p.at(1, 1) = 1;
  p.at(0, 1) = 0;  // s(e0) = e0 != e1 = t(e1)
  return p;
}

inline bool commutative(const std::vector<int>& table, int n) {
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (table[x * n + y] != table[y * n + x]) return false;
  return true;
}

}  // namespace fixtures
