#include <gtest/gtest.h>

#include <functional>

#include "support.hpp"

using namespace gyrolab;
using testing_support::to_table;

namespace {

/// All Latin squares of order n whose first row and column are 0..n-1.
std::vector<oracle::Table> reduced_latin_squares(int n) {
  std::vector<oracle::Table> out;
  oracle::Table t(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i) t[0][i] = t[i][0] = i;
  std::function<void(int)> fill = [&](int cell) {
    if (cell == n * n) {
      out.push_back(t);
      return;
    }
    const int r = cell / n;
    const int c = cell % n;
    if (r == 0 || c == 0) {
      fill(cell + 1);
      return;
    }
    for (int v = 0; v < n; ++v) {
      bool ok = true;
      for (int k = 0; k < c && ok; ++k) ok = t[r][k] != v;
      for (int k = 0; k < r && ok; ++k) ok = t[k][c] != v;
      if (!ok) continue;
      t[r][c] = v;
      fill(cell + 1);
      t[r][c] = -1;
    }
  };
  fill(0);
  return out;
}

}  // namespace

TEST(Gyro, CircTableMatchesDefinition) {
  for (const auto& spec : testing_support::small_class3_or_less()) {
    const FiniteGroup g = catalog_group(spec);
    EXPECT_EQ(to_table(circ_loop(g)), oracle::circ(to_table(g))) << spec;
  }
}

TEST(Gyro, CircIsAlwaysARightLoop) {
  for (const char* spec : {"dihedral:6", "dihedral:10", "dihedral:32", "product:dihedral:6,cyclic:4"}) {
    const FiniteLoop l = circ_loop(catalog_group(spec));
    EXPECT_TRUE(l.is_right_loop()) << spec;
  }
}

TEST(Gyro, AxiomsHoldForClassAtMostThree) {
  for (const auto& spec : testing_support::small_class3_or_less()) {
    const GyroConstruction c = build_gyro(catalog_group(spec));
    EXPECT_TRUE(c.warnings.empty()) << spec;
    const CheckReport r = is_gyrogroup(c);
    EXPECT_TRUE(r.passed()) << spec << ": " << r.detail;
    EXPECT_TRUE(oracle::is_gyrogroup(to_table(c.loop))) << spec;
  }
}

TEST(Gyro, WarningsForMissingHypotheses) {
  const GyroConstruction s3 = build_gyro(catalog_group("dihedral:6"));
  ASSERT_FALSE(s3.warnings.empty());
  EXPECT_NE(s3.warnings.front().find("not nilpotent"), std::string::npos);
  const GyroConstruction d32 = build_gyro(catalog_group("dihedral:32"));
  ASSERT_FALSE(d32.warnings.empty());
  EXPECT_NE(d32.warnings.front().find("class 4"), std::string::npos);
}

TEST(Gyro, AgreesWithOracleOnOutsideClasses) {
  for (const char* spec : {"dihedral:6", "dihedral:10", "dihedral:32", "quaternion:32"}) {
    const FiniteLoop l = circ_loop(catalog_group(spec));
    const oracle::Table t = to_table(l);
    if (!l.is_loop()) {
      EXPECT_TRUE(l.is_right_loop());
      continue;
    }
    EXPECT_EQ(is_gyrogroup(l).passed(), oracle::is_gyrogroup(t)) << spec;
  }
}

TEST(Gyro, AllReducedLatinSquaresOfOrderFive) {
  const auto squares = reduced_latin_squares(5);
  ASSERT_EQ(squares.size(), 56u);
  int failures = 0;
  for (const auto& t : squares) {
    const FiniteLoop l = loop_from_table(testing_support::rows_of(t));
    const CheckReport r = is_gyrogroup(l);
    const bool expected = oracle::is_gyrogroup(t);
    ASSERT_EQ(r.passed(), expected);
    if (expected) continue;
    ++failures;
    ASSERT_GE(r.witness.size(), 2u);
    const Elem a = r.witness[0];
    const Elem b = r.witness[1];
    const oracle::Perm f = oracle::gyration(t, a, b);
    if (r.witness.size() == 4) {
      const int x = r.witness[2];
      const int y = r.witness[3];
      EXPECT_NE(f[t[x][y]], t[f[x]][f[y]]);
    } else {
      const oracle::Perm g = oracle::gyration(t, t[a][b], a);
      bool inverse = true;
      for (int x = 0; x < 5; ++x) inverse = inverse && g[f[x]] == x;
      EXPECT_FALSE(inverse);
    }
  }
  EXPECT_GT(failures, 0);
}

TEST(Gyro, GyrationTableIsConsistent) {
  const FiniteLoop l = circ_loop(catalog_group("dihedral:16"));
  const GyrationTable gt = gyration_table(l);
  const GyrationTable serial = gyration_table(l, 1);
  EXPECT_EQ(gt.ids, serial.ids);
  for (Elem y = 0; y < 16; ++y) {
    for (Elem z = 0; z < 16; ++z) {
      EXPECT_EQ(gt.at(y, z), gyration(l, y, z));
      const oracle::Perm expected = oracle::gyration(to_table(l), y, z);
      EXPECT_EQ(std::vector<int>(gt.at(y, z).images().begin(), gt.at(y, z).images().end()), expected);
    }
  }
  EXPECT_TRUE(gt.at(0, 0).is_identity());
}

TEST(Gyro, GyrationsAreAutomorphisms) {
  const FiniteLoop l = circ_loop(catalog_group("semidihedral:16"));
  const GyrationTable gt = gyration_table(l);
  for (const auto& p : gt.distinct) EXPECT_FALSE(automorphism_defect(l, p).has_value());
}

TEST(Gyro, AssociativeExactlyForClassTwoOrLess) {
  for (const auto& spec : testing_support::small_class3_or_less()) {
    const FiniteGroup g = catalog_group(spec);
    const bool low = nilpotency_class(g).value() <= 2;
    EXPECT_EQ(is_associative(circ_loop(g)), low) << spec;
  }
}
