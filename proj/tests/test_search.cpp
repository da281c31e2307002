#include <gtest/gtest.h>

#include "support.hpp"

using namespace gyrolab;

TEST(Search, PowerOfThree) {
  EXPECT_FALSE(is_power_of_three(1));
  EXPECT_TRUE(is_power_of_three(3));
  EXPECT_TRUE(is_power_of_three(81));
  EXPECT_FALSE(is_power_of_three(54));
}

TEST(Search, ClassThreeThreeGroups) {
  const SearchRecord w = search_one(catalog_group("wreath33"), "wreath33", {});
  EXPECT_EQ(w.status, SearchStatus::Evaluated);
  EXPECT_FALSE(w.c1);
  EXPECT_TRUE(w.c1_witness.empty());
  EXPECT_FALSE(w.hit);

  const SearchRecord u = search_one(catalog_group("unitriangular4:3"), "ut", {});
  EXPECT_EQ(u.status, SearchStatus::Evaluated);
  EXPECT_FALSE(u.c2);
  EXPECT_EQ(u.derived_exponent, 3u);
  EXPECT_FALSE(u.hit);
}

TEST(Search, SkipsOutsideTheSearchSpace) {
  const SearchRecord d = search_one(catalog_group("dihedral:16"), "d16", {});
  EXPECT_EQ(d.status, SearchStatus::Skipped);
  EXPECT_NE(d.reason.find("not a 3-group"), std::string::npos);

  const SearchRecord h = search_one(catalog_group("heisenberg:3"), "h", {});
  EXPECT_EQ(h.status, SearchStatus::Skipped);
  EXPECT_NE(h.reason.find("class 2"), std::string::npos);

  SearchConfig small;
  small.max_order = 27;
  const SearchRecord m = search_one(catalog_group("wreath33"), "w", small);
  EXPECT_EQ(m.status, SearchStatus::Skipped);
  EXPECT_NE(m.reason.find("max order"), std::string::npos);
}

TEST(Search, ErrorsAreQuarantined) {
  std::vector<SearchInput> inputs{
      catalog_input("wreath33"),
      {"broken", []() -> FiniteGroup { throw Error(ErrorCode::ParseError, "bad file"); }},
      catalog_input("no-such-group"),
      catalog_input("dihedral:16"),
  };
  const SearchResult r = search_scan(inputs);
  ASSERT_EQ(r.records.size(), 4u);
  EXPECT_EQ(r.records[0].status, SearchStatus::Evaluated);
  EXPECT_EQ(r.records[1].status, SearchStatus::Error);
  EXPECT_NE(r.records[1].reason.find("bad file"), std::string::npos);
  EXPECT_EQ(r.records[2].status, SearchStatus::Error);
  EXPECT_EQ(r.records[3].status, SearchStatus::Skipped);
  EXPECT_EQ(r.summary.total, 4u);
  EXPECT_EQ(r.summary.evaluated, 1u);
  EXPECT_EQ(r.summary.errors, 2u);
  EXPECT_EQ(r.summary.skipped, 1u);
}

TEST(Search, DeterministicAcrossJobCounts) {
  std::vector<SearchInput> inputs;
  for (const char* s : {"wreath33", "heisenberg:3", "cyclic:27", "dihedral:16", "product:wreath33,cyclic:3", "wreath33"}) {
    inputs.push_back(catalog_input(s));
  }
  SearchConfig one;
  one.jobs = 1;
  SearchConfig four;
  four.jobs = 4;
  const SearchResult a = search_scan(inputs, one);
  const SearchResult b = search_scan(inputs, four);
  ASSERT_EQ(a.records.size(), b.records.size());
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    EXPECT_EQ(a.records[i].id, inputs[i].id);
    EXPECT_EQ(a.records[i].id, b.records[i].id);
    EXPECT_EQ(a.records[i].status, b.records[i].status);
    EXPECT_EQ(a.records[i].c1, b.records[i].c1);
    EXPECT_EQ(a.records[i].c3_witness, b.records[i].c3_witness);
  }
  EXPECT_EQ(a.summary.hits, b.summary.hits);
}
