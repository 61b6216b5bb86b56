#include <gtest/gtest.h>

#include <algorithm>

#include "chromsym/colourings.hpp"
#include "chromsym/error.hpp"
#include "oracles.hpp"

namespace chromsym {
namespace {

using R = ReverseHessenberg;

std::vector<Colouring> collect(const R& r, int m) {
  std::vector<Colouring> out;
  enumerate_colourings(r, m, [&](const Colouring& k, const ColouringStats&) { out.push_back(k); });
  return out;
}

TEST(Colourings, IsProper) {
  EXPECT_TRUE(is_proper(std::vector<int>{1, 2}, R::validate({0, 0})));
  EXPECT_FALSE(is_proper(std::vector<int>{1, 1}, R::validate({0, 0})));
  EXPECT_TRUE(is_proper(std::vector<int>{1, 1}, R::validate({0, 1})));
  EXPECT_FALSE(is_proper(std::vector<int>{1}, R::validate({0, 1})));
}

TEST(Colourings, EnumerationExamples) {
  EXPECT_EQ(collect(R::validate({0, 0}), 2), (std::vector<Colouring>{{1, 2}, {2, 1}}));
  EXPECT_EQ(collect(R::validate({0, 1}), 2).size(), 4u);
  EXPECT_TRUE(collect(R::complete(3), 2).empty());
  EXPECT_EQ(collect(R{}, 3), (std::vector<Colouring>{{}}));
  EXPECT_EQ(colouring_count(R::complete(3), 2), 0u);
  EXPECT_EQ(colouring_count(R{}, 2), 1u);
}

TEST(Colourings, StatsExamples) {
  const auto a = stats(std::vector<int>{1, 2}, R::validate({0, 0}), 2);
  EXPECT_EQ(a.ascents, 1);
  EXPECT_EQ(a.height, 3);
  EXPECT_EQ(a.weight, (WeightVector{1, 1}));
  EXPECT_EQ(a.cell_dim, 0);
  EXPECT_EQ(a.ascents_at, (std::vector<int>{0, 1}));

  const auto b = stats(std::vector<int>{2, 1}, R::validate({0, 0}), 2);
  EXPECT_EQ(b.ascents, 0);
  EXPECT_EQ(b.height, 3);
  EXPECT_EQ(b.cell_dim, 1);

  const auto c = stats(std::vector<int>{1, 1, 1}, R::staircase(3), 1);
  EXPECT_EQ(c.ascents, 0);
  EXPECT_EQ(c.height, 3);
  EXPECT_EQ(c.cell_dim, 0);
}

TEST(Colourings, StatsErrors) {
  auto code_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Unsupported;
  };
  EXPECT_EQ(code_of([] { stats(std::vector<int>{1, 1}, R::validate({0, 0}), 2); }), ErrorCode::NotProper);
  EXPECT_EQ(code_of([] { stats(std::vector<int>{1, 3}, R::validate({0, 0}), 2); }), ErrorCode::OutOfRange);
  EXPECT_EQ(code_of([] { stats(std::vector<int>{1}, R::validate({0, 0}), 2); }), ErrorCode::SizeMismatch);
}

TEST(Colourings, FixedPointChain) {
  EXPECT_EQ(fixed_point_chain(std::vector<int>{1, 2}, 2), (std::vector<WeightVector>{{1, 0}, {1, 1}}));
  EXPECT_EQ(fixed_point_chain(std::vector<int>{2, 2, 1}, 2), (std::vector<WeightVector>{{0, 1}, {0, 2}, {1, 2}}));
  EXPECT_TRUE(fixed_point_chain(std::vector<int>{}, 3).empty());
}

TEST(Colourings, EnumeratorRejectsTooManyColours) {
  EXPECT_THROW(ColouringEnumerator(R::staircase(2), kMaxColours + 1), Error);
  EXPECT_THROW(ColouringEnumerator(R::staircase(2), 0), Error);
}

// Enumeration equals the filtered brute force, element by element and in
// order; the count matches the product formula.
TEST(Colourings, MatchesBruteForce) {
  for (int n = 0; n <= 6; ++n) {
    for (const auto& r : all_reverse_hessenberg(n)) {
      const std::vector<int> rv(r.values().begin(), r.values().end());
      for (int m = 1; m <= 7; ++m) {
        const auto brute = oracle::all_proper_colourings(rv, m);
        std::vector<ColouringStats> got;
        std::vector<Colouring> kappas;
        enumerate_colourings(r, m, [&](const Colouring& k, const ColouringStats& s) {
          kappas.push_back(k);
          got.push_back(s);
        });
        ASSERT_EQ(got.size(), brute.size()) << r.to_string() << " m=" << m;
        ASSERT_EQ(colouring_count(r, m), brute.size());
        for (std::size_t k = 0; k < brute.size(); ++k) {
          ASSERT_EQ(kappas[k], brute[k].kappa);
          ASSERT_EQ(got[k].weight, brute[k].weight);
          ASSERT_EQ(got[k].ascents, brute[k].ascents);
          ASSERT_EQ(got[k].height, brute[k].height);
          ASSERT_EQ(got[k].cell_dim, brute[k].cell_dim);
        }
      }
    }
  }
}

TEST(Colourings, StreamInvariants) {
  for (int n = 0; n <= 6; ++n) {
    for (const auto& r : all_reverse_hessenberg(n)) {
      for (int m = std::max(1, min_colours(r)); m <= 6; ++m) {
        const int d_r = (m - 1) * n - edge_count(r);
        int top_cells = 0;
        int bottom_cells = 0;
        ColouringEnumerator e(r, m);
        e.run([&](const ColouringView& v) {
          const auto fresh = stats(v.kappa, r, m);
          ASSERT_EQ(fresh, v.stats());
          ASSERT_EQ(fixed_point_chain(v.kappa, m).empty() ? WeightVector(static_cast<std::size_t>(m), 0)
                                                          : fixed_point_chain(v.kappa, m).back(),
                    fresh.weight);
          for (int i = 1; i <= n; ++i) {
            const int a = fresh.ascents_at[static_cast<std::size_t>(i - 1)];
            ASSERT_GE(a, 0);
            ASSERT_LE(a, std::min(i - 1 - r(i), v.kappa[static_cast<std::size_t>(i - 1)] - 1));
            std::vector<int> window(v.kappa.begin() + r(i), v.kappa.begin() + i);
            std::sort(window.begin(), window.end());
            ASSERT_EQ(std::adjacent_find(window.begin(), window.end()), window.end());
          }
          ASSERT_GE(fresh.cell_dim, 0);
          ASSERT_LE(fresh.cell_dim, d_r);
          top_cells += fresh.cell_dim == d_r;
          bottom_cells += fresh.cell_dim == 0;
        });
        EXPECT_EQ(top_cells, 1) << r.to_string() << " m=" << m;
        EXPECT_EQ(bottom_cells, 1) << r.to_string() << " m=" << m;
      }
    }
  }
}

TEST(Colourings, PartitionedRunsCoverEverythingOnce) {
  const R r = R::validate({0, 0, 1, 2, 2});
  const int m = 4;
  std::vector<Colouring> all = collect(r, m);
  auto parts = partition_by_first_colour<std::vector<Colouring>>(r.size(), m, true, [&](int first) {
    std::vector<Colouring> out;
    ColouringEnumerator e(r, m);
    e.run_from(first, [&](const ColouringView& v) { out.push_back(v.colouring()); });
    return out;
  });
  std::vector<Colouring> joined;
  for (auto& p : parts) joined.insert(joined.end(), p.begin(), p.end());
  EXPECT_EQ(joined, all);
}

}  // namespace
}  // namespace chromsym
