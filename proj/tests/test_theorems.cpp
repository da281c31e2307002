#include <gtest/gtest.h>

#include <set>

#include "support.hpp"

using namespace gyrolab;
using testing_support::to_table;

namespace {

const CheckReport& find(const std::vector<CheckReport>& rs, const std::string& id) {
  for (const auto& r : rs) {
    if (r.check_id == id) return r;
  }
  throw std::runtime_error("missing report " + id);
}

}  // namespace

TEST(Theorems, SuiteHasUniqueIds) {
  std::set<std::string> ids;
  for (const auto& c : suite_checks()) {
    EXPECT_TRUE(ids.insert(c.id).second) << c.id;
    EXPECT_FALSE(c.statement.empty());
  }
  EXPECT_EQ(ids.size(), 30u);
}

TEST(Theorems, SuitePassesOnClassThreeGroups) {
  for (const auto& spec : testing_support::class3_specs()) {
    const auto reports = verify_suite(catalog_group(spec));
    ASSERT_EQ(reports.size(), suite_checks().size());
    for (std::size_t i = 0; i < reports.size(); ++i) {
      EXPECT_EQ(reports[i].check_id, suite_checks()[i].id);
      EXPECT_FALSE(reports[i].failed()) << spec << " " << reports[i].check_id << ": " << reports[i].detail;
      if (reports[i].status == CheckStatus::Skipped) EXPECT_FALSE(reports[i].reason.empty());
    }
  }
}

TEST(Theorems, DihedralSixteenRunsEveryCheck) {
  const auto reports = verify_suite(catalog_group("dihedral:16"));
  for (const auto& r : reports) {
    if (r.check_id == "class.two-engel" || r.check_id == "class.exponent-three") {
      EXPECT_EQ(r.status, CheckStatus::Skipped) << r.check_id;
      continue;
    }
    EXPECT_EQ(r.status, CheckStatus::Pass) << r.check_id << " " << r.reason;
  }
}

TEST(Theorems, ClassTwoGroupSkipsClassThreeChecks) {
  const auto reports = verify_suite(catalog_group("heisenberg:3"));
  for (const char* id : {"class.two-criterion", "bracket.non-associative", "inner.non-abelian"}) {
    const CheckReport& r = find(reports, id);
    EXPECT_EQ(r.status, CheckStatus::Skipped) << id;
    EXPECT_NE(r.reason.find("class 2"), std::string::npos) << r.reason;
  }
  EXPECT_TRUE(find(reports, "gyro.associative-iff-class2").passed());
}

TEST(Theorems, AbelianGroupPassesOrSkips) {
  for (const auto& r : verify_suite(catalog_group("cyclic:4"))) EXPECT_FALSE(r.failed()) << r.check_id;
}

TEST(Theorems, ClassFourSkipsClassBoundChecks) {
  const auto reports = verify_suite(catalog_group("dihedral:32"));
  for (const auto& r : reports) {
    EXPECT_FALSE(r.failed()) << r.check_id;
    if (r.skipped() && r.reason.find("class") != std::string::npos) EXPECT_NE(r.reason.find("class 4"), std::string::npos);
  }
  EXPECT_TRUE(find(reports, "gyro.axioms").skipped());
  EXPECT_TRUE(find(reports, "lemma.commutator-expansion").passed());
}

TEST(Theorems, SelectionFiltersAndRejectsUnknownIds) {
  const FiniteGroup g = catalog_group("dihedral:16");
  const auto reports = verify_suite(g, {"inner.non-abelian", "gyro.loop"});
  ASSERT_EQ(reports.size(), 2u);
  EXPECT_EQ(reports[0].check_id, "gyro.loop");
  EXPECT_EQ(reports[1].check_id, "inner.non-abelian");
  try {
    verify_suite(g, {"gyro.nope"});
    FAIL() << "expected InvalidArgument";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidArgument);
  }
}

TEST(Theorems, SuiteIsDeterministic) {
  const FiniteGroup g = catalog_group("semidihedral:16");
  const auto a = verify_suite(g, {}, 1);
  const auto b = verify_suite(g, {}, 4);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].status, b[i].status);
    EXPECT_EQ(a[i].witness, b[i].witness);
    EXPECT_EQ(a[i].detail, b[i].detail);
  }
}

TEST(Theorems, ClassTwoCriterion) {
  const Verdict d16 = class2_criterion(catalog_group("dihedral:16"));
  EXPECT_FALSE(d16.holds);
  ASSERT_EQ(d16.witness.size(), 2u);
  EXPECT_TRUE(class2_criterion(catalog_group("wreath33")).holds);
  EXPECT_EQ(loop_nilpotency_class(circ_loop(catalog_group("wreath33"))), 2);
  EXPECT_THROW(class2_criterion(catalog_group("heisenberg:3")), Error);
}

TEST(Theorems, NineIdentityLeastWitness) {
  const FiniteGroup g = catalog_group("dihedral:16");
  const oracle::Table t = to_table(g);
  const Verdict v = nine_identity(g);
  ASSERT_FALSE(v.holds);
  const auto expected = oracle::nine_witness(t);
  ASSERT_TRUE(expected.has_value());
  EXPECT_EQ(std::vector<int>(v.witness.begin(), v.witness.end()), *expected);
  EXPECT_EQ(v.witness, (std::vector<Elem>{1, 8, 8}));
  // (r, s, s r^2) is another violating triple.
  EXPECT_NE(oracle::power(t, oracle::comm(t, oracle::comm(t, 1, 8), 10), 9),
            oracle::power(t, oracle::comm(t, 1, oracle::comm(t, 8, 10)), 9));
  EXPECT_EQ(nine_identity(g, 1).witness, nine_identity(g, 8).witness);
}

TEST(Theorems, NineIdentityAgreesWithBracketAssociativity) {
  for (const auto& spec : testing_support::class3_specs()) {
    const FiniteGroup g = catalog_group(spec);
    if (g.order() % 3 == 0) continue;
    EXPECT_EQ(nine_identity(g).holds, oracle::bracket_associative(to_table(circ_loop(g)))) << spec;
  }
}

TEST(Theorems, FormulasMatchLoopOperations) {
  const FiniteGroup g = catalog_group("dihedral:16");
  const FiniteLoop l = circ_loop(g);
  for (Elem x = 0; x < 16; ++x) {
    for (Elem y = 0; y < 16; ++y) {
      EXPECT_EQ(commutator_formula(g, x, y), loop_commutator(l, x, y));
      for (Elem z = 0; z < 16; ++z) EXPECT_EQ(associator_formula(g, x, y, z), loop_associator(l, x, y, z));
    }
  }
}

TEST(Theorems, ReportsRecordTiming) {
  for (const auto& r : verify_suite(catalog_group("dihedral:8"))) EXPECT_GE(r.elapsed.count(), 0.0);
}
