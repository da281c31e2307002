#include <gtest/gtest.h>

#include <map>

#include "support.hpp"

using namespace gyrolab;
using testing_support::by_name;
using testing_support::to_set;
using testing_support::to_table;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an error";
  return ErrorCode::InvalidArgument;
}

std::map<std::size_t, int> order_profile(const FiniteGroup& g) {
  std::map<std::size_t, int> profile;
  for (std::size_t a = 0; a < g.order(); ++a) ++profile[g.element_order(static_cast<Elem>(a))];
  return profile;
}

std::map<std::size_t, int> order_profile(const oracle::Table& t) {
  std::map<std::size_t, int> profile;
  for (int a = 0; a < oracle::order(t); ++a) {
    std::size_t k = 1;
    for (int p = a; p != oracle::identity(t); p = t[p][a]) ++k;
    ++profile[k];
  }
  return profile;
}

}  // namespace

TEST(GroupFromTable, TrivialAndCyclicTwo) {
  const FiniteGroup one = group_from_table({{0}});
  EXPECT_EQ(one.order(), 1u);
  const FiniteGroup c2 = group_from_table({{0, 1}, {1, 0}});
  EXPECT_EQ(c2.order(), 2u);
  EXPECT_EQ(c2.inv(1), 1);
  EXPECT_TRUE(c2.is_abelian());
}

TEST(GroupFromTable, RejectsRepeatedRowEntry) {
  EXPECT_EQ(code_of([] { group_from_table({{0, 1}, {1, 1}}); }), ErrorCode::NotLatinSquare);
}

TEST(GroupFromTable, RejectsMissingIdentity) {
  EXPECT_EQ(code_of([] { group_from_table({{0, 2, 1}, {2, 1, 0}, {1, 0, 2}}); }), ErrorCode::NoIdentity);
}

TEST(GroupFromTable, RejectsNonAssociativeLatinSquare) {
  // A loop of order 5 that is not a group.
  const std::vector<std::vector<long long>> t{
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  EXPECT_EQ(code_of([&] { group_from_table(t); }), ErrorCode::NotAssociative);
}

TEST(GroupFromTable, RejectsOutOfRangeAndRaggedInput) {
  EXPECT_EQ(code_of([] { group_from_table({{0, 2}, {1, 0}}); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([] { group_from_table({{0, 1}, {1}}); }), ErrorCode::DimensionMismatch);
}

TEST(GroupFromTable, RelocatesIdentityToZero) {
  // Z3 with the identity stored at index 2.
  const std::vector<std::vector<long long>> t{{1, 2, 0}, {2, 0, 1}, {0, 1, 2}};
  const FiniteGroup g = group_from_table(t, {"a", "b", "e"});
  EXPECT_EQ(g.name(0), "e");
  for (Elem x = 0; x < 3; ++x) {
    EXPECT_EQ(g.mul(0, x), x);
    EXPECT_EQ(g.mul(x, 0), x);
  }
  EXPECT_TRUE(oracle::is_associative(to_table(g)));
}

TEST(GroupFromPermutations, SmallExamples) {
  EXPECT_EQ(group_from_permutations(3, {{1, 2, 0}}).order(), 3u);
  EXPECT_EQ(group_from_permutations(2, {{0, 1}}).order(), 1u);
  EXPECT_EQ(group_from_permutations(4, {}).order(), 1u);
}

TEST(GroupFromPermutations, OctagonSymmetriesGiveDihedralSixteen) {
  const FiniteGroup g = group_from_permutations(8, {{1, 2, 3, 4, 5, 6, 7, 0}, {0, 7, 6, 5, 4, 3, 2, 1}});
  const oracle::Table expected = oracle::dihedral(8);
  EXPECT_EQ(g.order(), 16u);
  EXPECT_TRUE(oracle::is_associative(to_table(g)));
  EXPECT_EQ(order_profile(g), order_profile(expected));
  EXPECT_EQ(group_center(g).size(), oracle::group_center(expected).size());
  EXPECT_EQ(nilpotency_class(g), oracle::nilpotency_class(expected));
}

TEST(GroupFromPermutations, Errors) {
  EXPECT_EQ(code_of([] { group_from_permutations(3, {{0, 0, 1}}); }), ErrorCode::NotABijection);
  EXPECT_EQ(code_of([] { group_from_permutations(3, {{0, 1}}); }), ErrorCode::NotABijection);
  EXPECT_EQ(code_of([] { group_from_permutations(5, {{1, 2, 3, 4, 0}, {1, 0, 2, 3, 4}}, 50); }),
            ErrorCode::OrderCapExceeded);
}

TEST(Catalog, OrdersAndClasses) {
  const std::vector<std::tuple<std::string, std::size_t, int>> expected{
      {"trivial", 1, 0},          {"cyclic:9", 9, 1},       {"dihedral:8", 8, 2},
      {"dihedral:16", 16, 3},     {"quaternion:8", 8, 2},   {"quaternion:16", 16, 3},
      {"semidihedral:16", 16, 3}, {"heisenberg:2", 8, 2},   {"heisenberg:3", 27, 2},
      {"heisenberg:5", 125, 2},   {"unitriangular4:2", 64, 3}, {"wreath33", 81, 3},
      {"dihedral:32", 32, 4},     {"product:dihedral:8,cyclic:3", 24, 2},
  };
  for (const auto& [spec, n, cls] : expected) {
    const FiniteGroup g = catalog_group(spec);
    EXPECT_EQ(g.order(), n) << spec;
    EXPECT_EQ(nilpotency_class(g), cls) << spec;
    if (n <= 64) {
      const oracle::Table t = to_table(g);
      EXPECT_TRUE(oracle::is_latin(t)) << spec;
      EXPECT_TRUE(oracle::is_associative(t)) << spec;
      EXPECT_EQ(oracle::nilpotency_class(t), cls) << spec;
    }
  }
}

TEST(Catalog, NonNilpotentGroupHasNoClass) {
  EXPECT_FALSE(nilpotency_class(catalog_group("dihedral:6")).has_value());
}

TEST(Catalog, DihedralMatchesPolygonModel) {
  for (int m : {3, 4, 5, 8}) {
    const FiniteGroup g = catalog_group("dihedral:" + std::to_string(2 * m));
    EXPECT_EQ(order_profile(g), order_profile(oracle::dihedral(m)));
  }
}

TEST(Catalog, UnknownSpecsAreRejected) {
  for (const char* bad : {"bogus", "cyclic:0", "dihedral:7", "quaternion:12", "semidihedral:8", "heisenberg:4",
                          "product:cyclic:2", "cyclic:x"}) {
    EXPECT_EQ(code_of([&] { catalog_group(bad); }), ErrorCode::UnknownSpec) << bad;
  }
  EXPECT_EQ(code_of([] { catalog_group("unitriangular4:3", 100); }), ErrorCode::OrderCapExceeded);
}

TEST(Catalog, DihedralSixteenNamedElements) {
  const FiniteGroup g = catalog_group("dihedral:16");
  const Elem r = by_name(g, "r");
  const Elem s = by_name(g, "s");
  EXPECT_EQ(g.comm(r, s), by_name(g, "r^2"));
  EXPECT_EQ(to_set(group_center(g)), (oracle::Set{0, by_name(g, "r^4")}));
  EXPECT_EQ(g.mul(s, by_name(g, "r^3")), by_name(g, "sr^3"));
}

TEST(GroupCore, CenterAndClassAgreeWithOracle) {
  for (const auto& spec : testing_support::small_class3_or_less()) {
    const FiniteGroup g = catalog_group(spec);
    const oracle::Table t = to_table(g);
    EXPECT_EQ(to_set(group_center(g)), oracle::group_center(t)) << spec;
    EXPECT_EQ(nilpotency_class(g).value_or(-1), oracle::nilpotency_class(t)) << spec;
  }
}

TEST(GroupCore, LowerCentralSeriesIsDescending) {
  const auto series = lower_central_series(catalog_group("unitriangular4:2"));
  ASSERT_EQ(series.size(), 4u);
  for (std::size_t i = 1; i < series.size(); ++i) EXPECT_TRUE(series[i].is_subset_of(series[i - 1]));
  EXPECT_EQ(series.back().size(), 1u);
}

TEST(GroupCore, CommutatorExpansionHoldsInEveryCatalogGroup) {
  for (const auto& spec : testing_support::small_class3_or_less()) {
    const FiniteGroup g = catalog_group(spec);
    const auto n = static_cast<Elem>(g.order());
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        for (Elem z = 0; z < n; ++z) {
          ASSERT_EQ(g.comm(g.mul(x, y), z), g.mul(g.mul(g.comm(x, g.comm(y, z)), g.comm(y, z)), g.comm(x, z)))
              << spec;
          ASSERT_EQ(g.comm(x, g.mul(y, z)), g.mul(g.mul(g.comm(x, y), g.comm(y, g.comm(x, z))), g.comm(x, z)))
              << spec;
        }
      }
    }
  }
}

TEST(GroupCore, QuotientByCenter) {
  const FiniteGroup g = catalog_group("dihedral:16");
  const GroupQuotient q = quotient_group(g, group_center(g));
  EXPECT_EQ(q.group.order(), 8u);
  for (Elem x = 0; x < 16; ++x) {
    for (Elem y = 0; y < 16; ++y) {
      EXPECT_EQ(q.projection[g.mul(x, y)], q.group.mul(q.projection[x], q.projection[y]));
    }
  }
  for (std::size_t c = 0; c < q.representatives.size(); ++c) EXPECT_EQ(q.projection[q.representatives[c]], c);
  EXPECT_EQ(nilpotency_class(q.group), 2);
}

TEST(GroupCore, NonNormalSubgroupIsRejected) {
  const FiniteGroup g = catalog_group("dihedral:16");
  const ElementSet reflection(16, {0, by_name(g, "s")});
  EXPECT_TRUE(is_subgroup(g, reflection));
  EXPECT_FALSE(is_normal_subgroup(g, reflection));
  EXPECT_EQ(code_of([&] { quotient_group(g, reflection); }), ErrorCode::NotNormal);
}

TEST(GroupCore, ExponentsAndEngel) {
  const FiniteGroup ut = catalog_group("unitriangular4:3");
  EXPECT_EQ(subset_exponent(ut, derived_subgroup(ut)), 3u);
  EXPECT_EQ(derived_subgroup(ut).size(), 27u);
  const FiniteGroup w = catalog_group("wreath33");
  EXPECT_EQ(subset_exponent(w, derived_subgroup(w)), 3u);
  EXPECT_EQ(group_exponent(catalog_group("heisenberg:3")), 3u);
  EXPECT_EQ(group_exponent(catalog_group("dihedral:16")), 8u);
  EXPECT_TRUE(is_two_engel(catalog_group("heisenberg:3")));
  EXPECT_TRUE(is_two_engel(catalog_group("quaternion:8")));
  EXPECT_FALSE(is_two_engel(catalog_group("dihedral:16")));
  const FiniteGroup d = catalog_group("dihedral:16");
  EXPECT_EQ(code_of([&] { subset_exponent(d, ElementSet(16, {0, 1})); }), ErrorCode::NotASubgroup);
}

TEST(GroupCore, DirectProduct) {
  const FiniteGroup p = catalog_group("product:dihedral:8,product:cyclic:3,cyclic:2");
  EXPECT_EQ(p.order(), 48u);
  EXPECT_TRUE(oracle::is_associative(to_table(p)));
  EXPECT_EQ(group_center(p).size(), 12u);
  EXPECT_EQ(code_of([] { direct_product(catalog_group("cyclic:100"), catalog_group("cyclic:200"), 1000); }),
            ErrorCode::OrderCapExceeded);
}

TEST(GroupCore, SubgroupGeneratedMatchesOracle) {
  const FiniteGroup g = catalog_group("semidihedral:16");
  for (Elem a = 0; a < 16; ++a) {
    for (Elem b = a; b < 16; ++b) {
      EXPECT_EQ(to_set(subgroup_generated(g, ElementSet(16, {a, b}))),
                oracle::generated(to_table(g), oracle::Set{a, b}));
    }
  }
}
