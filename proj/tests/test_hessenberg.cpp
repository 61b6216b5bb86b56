#include <gtest/gtest.h>

#include <set>

#include "chromsym/error.hpp"
#include "chromsym/hessenberg.hpp"
#include "oracles.hpp"

namespace chromsym {
namespace {

std::vector<int> values_of(const ReverseHessenberg& r) { return {r.values().begin(), r.values().end()}; }

TEST(Hessenberg, ValidateAcceptsStaircaseAndComplete) {
  EXPECT_EQ(values_of(ReverseHessenberg::validate({0, 1, 2})), (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(values_of(ReverseHessenberg::validate({0, 0, 0})), (std::vector<int>{0, 0, 0}));
  EXPECT_TRUE(ReverseHessenberg::validate({}).empty());
}

TEST(Hessenberg, ValidateRejectsDecrease) {
  try {
    ReverseHessenberg::validate({0, 2, 1});
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotWeaklyIncreasing);
  }
}

TEST(Hessenberg, ValidateRejectsOutOfRange) {
  for (auto bad : {std::vector<int>{1}, std::vector<int>{0, 2}, std::vector<int>{-1}, std::vector<int>{0, 0, 3}}) {
    try {
      ReverseHessenberg::validate(bad);
      FAIL() << "expected an error";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::OutOfRange);
    }
  }
}

TEST(Hessenberg, ParseTextForm) {
  EXPECT_EQ(ReverseHessenberg::parse("0,1,1,3").to_string(), "0,1,1,3");
  EXPECT_EQ(ReverseHessenberg::parse(" 0, 0 ,1 ").to_string(), "0,0,1");
  EXPECT_TRUE(ReverseHessenberg::parse("").empty());
  EXPECT_THROW(ReverseHessenberg::parse("0,,1"), Error);
  EXPECT_THROW(ReverseHessenberg::parse("0,a"), Error);
  try {
    ReverseHessenberg::parse("0,2,1");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotWeaklyIncreasing);
  }
}

TEST(Hessenberg, Feasibility) {
  EXPECT_TRUE(is_feasible(ReverseHessenberg::complete(3), 3));
  EXPECT_FALSE(is_feasible(ReverseHessenberg::complete(3), 2));
  EXPECT_TRUE(is_feasible(ReverseHessenberg::staircase(3), 1));
  EXPECT_EQ(min_colours(ReverseHessenberg::validate({0, 0, 1})), 2);
  EXPECT_EQ(min_colours(ReverseHessenberg{}), 0);
}

TEST(Hessenberg, EdgeCount) {
  EXPECT_EQ(edge_count(ReverseHessenberg::validate({0, 1, 2})), 0);
  EXPECT_EQ(edge_count(ReverseHessenberg::validate({0, 0, 0})), 3);
  EXPECT_EQ(edge_count(ReverseHessenberg::validate({0, 0, 1})), 2);
}

TEST(Hessenberg, Edges) {
  EXPECT_TRUE(edges(ReverseHessenberg::staircase(3)).edges.empty());
  EXPECT_EQ(edges(ReverseHessenberg::validate({0, 0, 1})).edges, (std::vector<Edge>{{1, 2}, {2, 3}}));
  EXPECT_EQ(edges(ReverseHessenberg::complete(3)).edges, (std::vector<Edge>{{1, 2}, {1, 3}, {2, 3}}));
}

TEST(Hessenberg, NamedFunctions) {
  EXPECT_EQ(ReverseHessenberg::staircase(3).to_string(), "0,1,2");
  EXPECT_EQ(ReverseHessenberg::complete(3).to_string(), "0,0,0");
  EXPECT_TRUE(ReverseHessenberg::staircase(0).empty());
  EXPECT_EQ(ReverseHessenberg::validate({0, 0, 1}).restriction().to_string(), "0,0");
}

TEST(Hessenberg, EnumerationSmallCases) {
  auto one = all_reverse_hessenberg(1);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].to_string(), "0");
  EXPECT_EQ(all_reverse_hessenberg(3).size(), 5u);
  EXPECT_EQ(all_reverse_hessenberg(4).size(), 14u);
  EXPECT_EQ(all_reverse_hessenberg(0).size(), 1u);
}

TEST(Hessenberg, EnumerationMatchesCatalanAndIsSortedUnique) {
  for (int n = 0; n <= 10; ++n) {
    const auto all = all_reverse_hessenberg(n);
    EXPECT_EQ(all.size(), oracle::count_reverse_hessenberg(n)) << "n = " << n;
    EXPECT_EQ(all.size(), oracle::catalan(n)) << "n = " << n;
    EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
    EXPECT_EQ(std::set<ReverseHessenberg>(all.begin(), all.end()).size(), all.size());
    for (const auto& r : all) {
      for (int i = 1; i <= n; ++i) {
        ASSERT_GE(r(i), 0);
        ASSERT_LT(r(i), i);
        if (i < n) ASSERT_LE(r(i), r(i + 1));
      }
    }
  }
}

TEST(Hessenberg, EdgesAreUnitIntervalAdjacency) {
  for (int n = 0; n <= 8; ++n) {
    for (const auto& r : all_reverse_hessenberg(n)) {
      const auto g = edges(r);
      ASSERT_EQ(static_cast<int>(g.edges.size()), edge_count(r));
      for (int i = 1; i <= n; ++i) {
        std::vector<int> nbrs;
        for (const auto& e : g.edges) {
          if (e.upper == i) nbrs.push_back(e.lower);
        }
        std::vector<int> expected;
        for (int j = r(i) + 1; j < i; ++j) expected.push_back(j);
        ASSERT_EQ(nbrs, expected) << r.to_string() << " vertex " << i;
      }
    }
  }
}

}  // namespace
}  // namespace chromsym
