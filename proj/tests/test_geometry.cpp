#include <gtest/gtest.h>

#include "chromsym/error.hpp"
#include "chromsym/geometry.hpp"
#include "oracles.hpp"

namespace chromsym {
namespace {

using R = ReverseHessenberg;

QPoly P(std::initializer_list<long> coeffs) { return QPoly::from_coeffs(0, coeffs); }

TEST(Geometry, Dimension) {
  EXPECT_EQ(dimension(R::staircase(3), 2), 3);
  EXPECT_EQ(dimension(R::validate({0, 0, 1}), 3), 4);
  EXPECT_EQ(dimension(R::complete(3), 3), 3);
  EXPECT_EQ(dimension(R{}, 1), 0);
  try {
    dimension(R::complete(3), 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Infeasible);
  }
}

TEST(Geometry, FibreDimension) {
  EXPECT_EQ(fibre_dimension(R::validate({0, 0, 1}), 3, 3), 1);
  EXPECT_EQ(fibre_dimension(R::validate({0}), 4, 1), 3);
  for (int i = 1; i <= 5; ++i) EXPECT_EQ(fibre_dimension(R::staircase(5), 4, i), 3);
  EXPECT_THROW(fibre_dimension(R::staircase(2), 2, 3), Error);
  EXPECT_THROW(fibre_dimension(R::complete(3), 2, 1), Error);
}

TEST(Geometry, PoincareProduct) {
  EXPECT_EQ(poincare_product(R::validate({0}), 2), P({1, 1}));
  EXPECT_EQ(poincare_product(R::validate({0, 0}), 2), P({1, 1}));
  EXPECT_EQ(poincare_product(R::validate({0, 0, 1}), 3), P({1, 3, 4, 3, 1}));
  EXPECT_EQ(poincare_product(R{}, 3), P({1}));
  EXPECT_THROW(poincare_product(R::complete(3), 2), Error);
}

TEST(Geometry, PoincareCells) {
  EXPECT_EQ(poincare_bb(R::validate({0}), 2), P({1, 1}));
  EXPECT_EQ(poincare_bb(R::validate({0, 0}), 2), P({1, 1}));
  EXPECT_EQ(poincare_bb(R::staircase(1), 3), P({1, 1, 1}));
  EXPECT_THROW(poincare_bb(R::complete(3), 2), Error);
}

TEST(Geometry, PoincareCellsMatchBruteForce) {
  for (int n = 0; n <= 5; ++n) {
    for (const auto& r : all_reverse_hessenberg(n)) {
      const std::vector<int> rv(r.values().begin(), r.values().end());
      for (int m = std::max(1, min_colours(r)); m <= 5; ++m) {
        QPoly expected;
        for (const auto& [d, c] : oracle::cell_counts(rv, m)) expected.add_term(d, BigInt(static_cast<unsigned long>(c)));
        EXPECT_EQ(poincare_bb(r, m), expected) << r.to_string() << " m=" << m;
        EXPECT_EQ(poincare_bb(r, m, true), expected);
      }
    }
  }
}

TEST(Geometry, TwoRhoPairing) {
  EXPECT_EQ(two_rho_pairing(std::vector<int>{1, 1}), 0);
  EXPECT_EQ(two_rho_pairing(std::vector<int>{0, 1}), -1);
  EXPECT_EQ(two_rho_pairing(std::vector<int>{2, 0, 1}), 2 * 2 + 0 + 1 * -2);
}

TEST(Geometry, ExponentIdentity) {
  EXPECT_TRUE(exponent_identity_check(R::validate({0, 0}), 2));
  EXPECT_TRUE(exponent_identity_check(R::staircase(1), 2));
  EXPECT_TRUE(exponent_identity_check(R{}, 3));
  EXPECT_THROW(exponent_identity_check(R::complete(3), 2), Error);
}

TEST(Geometry, ReportInvariants) {
  for (int n = 0; n <= 5; ++n) {
    for (const auto& r : all_reverse_hessenberg(n)) {
      for (int m = std::max(1, min_colours(r)); m <= 6; ++m) {
        const auto report = geometry_report(r, m);
        EXPECT_TRUE(report.identities_pass) << r.to_string() << " m=" << m;
        EXPECT_TRUE(report.poincare_equal());
        EXPECT_EQ(report.poincare_product.degree(), report.dimension);
        EXPECT_EQ(report.poincare_bb.eval_at_one(), BigInt(static_cast<unsigned long>(oracle::all_proper_colourings(
                                                          std::vector<int>(r.values().begin(), r.values().end()), m)
                                                          .size())));
        EXPECT_EQ(static_cast<int>(report.fibre_dims.size()), n);
      }
    }
  }
}

}  // namespace
}  // namespace chromsym
