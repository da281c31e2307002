#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "gyrolab/gyrolab.hpp"
#include "oracle.hpp"

namespace testing_support {

inline oracle::Table to_table(const gyrolab::FiniteGroup& g) {
  const int n = static_cast<int>(g.order());
  oracle::Table t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = g.mul(static_cast<gyrolab::Elem>(i), static_cast<gyrolab::Elem>(j));
  return t;
}

inline oracle::Table to_table(const gyrolab::FiniteLoop& l) {
  const int n = static_cast<int>(l.order());
  oracle::Table t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = l.mul(static_cast<gyrolab::Elem>(i), static_cast<gyrolab::Elem>(j));
  return t;
}

inline oracle::Set to_set(const gyrolab::ElementSet& s) {
  oracle::Set out;
  for (auto e : s.members()) out.insert(e);
  return out;
}

inline std::vector<std::vector<long long>> rows_of(const oracle::Table& t) {
  std::vector<std::vector<long long>> rows;
  for (const auto& r : t) rows.emplace_back(r.begin(), r.end());
  return rows;
}

inline gyrolab::Elem by_name(const gyrolab::FiniteGroup& g, const std::string& name) {
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (g.name(static_cast<gyrolab::Elem>(i)) == name) return static_cast<gyrolab::Elem>(i);
  }
  throw std::runtime_error("no element named " + name);
}

/// Catalog groups of class at most 3 that are cheap enough for oracle scans.
inline const std::vector<std::string>& small_class3_or_less() {
  static const std::vector<std::string> specs{
      "trivial",         "cyclic:2",       "cyclic:3",        "cyclic:4",          "cyclic:6",
      "cyclic:9",        "dihedral:8",     "dihedral:16",     "quaternion:8",      "quaternion:16",
      "semidihedral:16", "heisenberg:2",   "heisenberg:3",    "unitriangular4:2",  "product:dihedral:8,cyclic:3",
      "product:quaternion:8,cyclic:2",
  };
  return specs;
}

/// Catalog groups of class exactly 3.
inline const std::vector<std::string>& class3_specs() {
  static const std::vector<std::string> specs{
      "dihedral:16",      "quaternion:16", "semidihedral:16", "unitriangular4:2", "wreath33",
      "product:dihedral:16,cyclic:3", "product:quaternion:16,cyclic:5",
  };
  return specs;
}

}  // namespace testing_support
