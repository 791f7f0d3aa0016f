#include "guardian/ode_checks.hpp"

#include <cmath>

#include <gtest/gtest.h>

#include "guardian/compound.hpp"
#include "guardian/kron.hpp"
#include "guardian/random.hpp"

namespace guardian {
namespace {

TEST(SkewBasisTest, Structure) {
  const Matrix s = skew_basis_element(3, 0, 2);
  EXPECT_EQ(s, (Matrix{{0, 0, 1}, {0, 0, 0}, {-1, 0, 0}}));
  EXPECT_EQ(skew_violation(s), 0.0);
  // Orthogonal under the trace inner product.
  const Matrix t = skew_basis_element(3, 1, 2);
  EXPECT_EQ(matmul(s.transpose(), t).trace(), 0.0);
  EXPECT_EQ(matmul(s.transpose(), s).trace(), 2.0);
  EXPECT_THROW(skew_basis_element(3, 2, 1), DimensionError);
  EXPECT_THROW(skew_basis_element(3, 1, 3), DimensionError);
}

TEST(ExtractTest, Golden) {
  const Matrix x{{1, 2}, {2, 3}};
  EXPECT_EQ(extract_w(x), (std::vector<double>{1, 2, 3}));
  const Matrix y{{0, 4, 5}, {-4, 0, 6}, {-5, -6, 0}};
  EXPECT_EQ(extract_v(y), (std::vector<double>{4, 5, 6}));
  EXPECT_EQ(extract_v(Matrix::zeros(4, 4)), std::vector<double>(6, 0.0));
  EXPECT_EQ(extract_w(Matrix::identity(3)), (std::vector<double>{1, 0, 0, 1, 0, 1}));
}

TEST(ExtractTest, RoundTrip) {
  auto rng = make_rng(81);
  const Matrix s = random_symmetric(rng, 5);
  EXPECT_EQ(symmetric_from_w(extract_w(s), 5), s);
  const Matrix k = random_skew(rng, 5);
  EXPECT_EQ(skew_from_v(extract_v(k), 5), k);
}

TEST(ExtractTest, RejectsWrongStructure) {
  const Matrix x{{1, 2}, {3, 4}};
  EXPECT_THROW(extract_w(x), DimensionError);
  EXPECT_THROW(extract_v(x), DimensionError);
  EXPECT_THROW(symmetric_from_w(std::vector<double>{1, 2}, 2), DimensionError);
}

TEST(ClosedFormTest, TrivialCases) {
  auto rng = make_rng(82);
  const Matrix a = random_matrix(rng, 3, 3);
  const Matrix x0 = random_matrix(rng, 3, 3);
  EXPECT_LE(max_abs_diff(matrix_ode_closed_form(a, x0, 0.0), x0), 1e-15);
  EXPECT_LE(max_abs_diff(matrix_ode_closed_form(Matrix::zeros(3, 3), x0, 2.5), x0), 1e-15);
  const double l1 = -0.4, l2 = 0.9, t = 1.3;
  const Matrix x = matrix_ode_closed_form(Matrix::diagonal({l1, l2}), Matrix{{1, 1}, {1, 1}}, t);
  EXPECT_NEAR(x(0, 0), std::exp(2 * l1 * t), 1e-13);
  EXPECT_NEAR(x(0, 1), std::exp((l1 + l2) * t), 1e-13);
  EXPECT_NEAR(x(1, 1), std::exp(2 * l2 * t), 1e-12);
  EXPECT_THROW(matrix_ode_closed_form(a, Matrix(2, 2), 1.0), DimensionError);
}

TEST(Rk4Test, MatchesClosedForm) {
  auto rng = make_rng(83);
  const Matrix a = random_matrix(rng, 3, 3);
  const Matrix x0 = random_matrix(rng, 3, 3);
  EXPECT_LE(max_abs_diff(matrix_ode_rk4(a, x0, 1.0, kDefaultRk4Steps), matrix_ode_closed_form(a, x0, 1.0)), 1e-6);
  EXPECT_EQ(matrix_ode_rk4(Matrix::zeros(3, 3), x0, 1.0, 10), x0);
  EXPECT_THROW(matrix_ode_rk4(a, x0, 1.0, 0), DimensionError);
}

TEST(Rk4Test, PreservesStructure) {
  auto rng = make_rng(84);
  for (std::size_t n = 2; n <= 5; ++n) {
    const Matrix a = random_matrix(rng, n, n);
    const Matrix xs = matrix_ode_rk4(a, random_symmetric(rng, n), 2.0, kDefaultRk4Steps);
    EXPECT_LE(asymmetry(xs), 1e-9 * std::max(1.0, xs.max_abs()));
    const Matrix xk = matrix_ode_rk4(a, random_skew(rng, n), 2.0, kDefaultRk4Steps);
    EXPECT_LE(skew_violation(xk), 1e-9 * std::max(1.0, xk.max_abs()));
  }
}

TEST(Rk4Test, FourthOrderConvergence) {
  auto rng = make_rng(85);
  const Matrix a = random_matrix(rng, 3, 3);
  const Matrix x0 = random_matrix(rng, 3, 3);
  const Matrix exact = matrix_ode_closed_form(a, x0, 1.0);
  const double e1 = max_abs_diff(matrix_ode_rk4(a, x0, 1.0, 20), exact);
  const double e2 = max_abs_diff(matrix_ode_rk4(a, x0, 1.0, 40), exact);
  EXPECT_GE(e1 / e2, 12.0);
  EXPECT_LE(e1 / e2, 20.0);
}

TEST(VecDynamicsTest, CentredDifferenceAlongTrajectory) {
  auto rng = make_rng(86);
  const Matrix a = random_matrix(rng, 3, 3);
  const Matrix x0 = random_matrix(rng, 3, 3);
  const double h = 1e-3;
  const Matrix xm = matrix_ode_rk4(a, x0, 1.0 - h, 500);
  const Matrix xp = matrix_ode_rk4(a, x0, 1.0 + h, 500);
  const Matrix x = matrix_ode_rk4(a, x0, 1.0, 500);
  const Matrix deriv = (1.0 / (2 * h)) * (vec_rows(xp) - vec_rows(xm));
  EXPECT_LE(max_abs_diff(deriv, matmul(kron_sum_self(a), vec_rows(x))), 1e-4 * std::max(1.0, x.max_abs()));
}

TEST(Prop6Test, TwoPaths) {
  auto rng = make_rng(87);
  for (std::size_t n = 1; n <= 5; ++n) {
    const Matrix a = random_matrix(rng, n, n);
    const Matrix x0 = random_symmetric(rng, n);
    EXPECT_LE(check_prop6(a, x0, 0.7), 1e-7);
    EXPECT_LE(check_prop6(a, x0, 0.0), 1e-15);
  }
  EXPECT_THROW(check_prop6(Matrix::identity(2), Matrix{{1, 2}, {3, 4}}, 1.0), DimensionError);
}

TEST(Prop6Test, DiagonalEntrywise) {
  const Matrix a = Matrix::diagonal({-0.5, 0.2});
  const Matrix x0{{1.0, 2.0}, {2.0, 3.0}};
  const double t = 0.9;
  const auto w = extract_w(matrix_ode_closed_form(a, x0, t));
  EXPECT_NEAR(w[0], std::exp(-1.0 * t), 1e-14);
  EXPECT_NEAR(w[1], 2.0 * std::exp(-0.3 * t), 1e-14);
  EXPECT_NEAR(w[2], 3.0 * std::exp(0.4 * t), 1e-14);
  EXPECT_LE(check_prop6(a, x0, t), 1e-14);
}

TEST(Prop7Test, TwoPaths) {
  auto rng = make_rng(88);
  for (std::size_t n = 2; n <= 5; ++n) {
    const Matrix a = random_matrix(rng, n, n);
    const Matrix x0 = random_skew(rng, n);
    EXPECT_LE(check_prop7(a, x0, 0.5), 1e-7);
    EXPECT_LE(check_prop7(a, x0, 0.0), 1e-15);
  }
  EXPECT_THROW(check_prop7(Matrix::identity(1), Matrix::zeros(1, 1), 1.0), DimensionError);
}

TEST(Prop7Test, TwoByTwoScalar) {
  const Matrix a{{0.3, 1.1}, {-0.7, -0.9}};
  const Matrix x0{{0, 2}, {-2, 0}};
  const double t = 1.2;
  const auto v = extract_v(matrix_ode_closed_form(a, x0, t));
  EXPECT_NEAR(v[0], 2.0 * std::exp((0.3 - 0.9) * t), 1e-13);
}

TEST(Lemma1Test, IdentityAndDiagonal) {
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) {
      EXPECT_EQ(check_lemma1(Matrix::identity(4), i, j), 0.0);
      EXPECT_EQ(check_lemma1(Matrix::diagonal({1.0, -2.0, 3.5, 0.25}), i, j), 0.0);
    }
  EXPECT_THROW(check_lemma1(Matrix::identity(3), 1, 1), DimensionError);
}

TEST(Lemma1Test, RandomAllPairs) {
  auto rng = make_rng(89);
  for (std::size_t n = 2; n <= 6; ++n) {
    const Matrix a = random_matrix(rng, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) EXPECT_LE(check_lemma1(a, i, j), 1e-11);
  }
}

}  // namespace
}  // namespace guardian
