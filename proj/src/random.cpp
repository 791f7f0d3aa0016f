#include "guardian/random.hpp"

#include <algorithm>
#include <cmath>

namespace guardian {

Rng make_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32),
                    static_cast<std::uint32_t>(index),
                    static_cast<std::uint32_t>(index >> 32)};
  return Rng(seq);
}

Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, double lo, double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(rng);
  return m;
}

Matrix random_integer_matrix(Rng& rng, std::size_t rows, std::size_t cols, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(rng);
  return m;
}

// Identity plus a perturbation of 1-norm below 1/2 keeps cond_1 <= 3.
Matrix random_well_conditioned(Rng& rng, std::size_t n) {
  const Matrix e = random_matrix(rng, n, n, -1.0, 1.0);
  const double scale = 0.45 / std::max(1.0, e.norm1());
  return Matrix::identity(n) + scale * e;
}

Matrix random_symmetric(Rng& rng, std::size_t n) {
  const Matrix m = random_matrix(rng, n, n);
  return 0.5 * (m + m.transpose());
}

Matrix random_skew(Rng& rng, std::size_t n) {
  const Matrix m = random_matrix(rng, n, n);
  return 0.5 * (m - m.transpose());
}

Matrix random_hurwitz(Rng& rng, std::size_t n, double eps) {
  const Matrix p = random_matrix(rng, n, n);
  return -(matmul(p.transpose(), p) + eps * Matrix::identity(n));
}

Matrix random_hurwitz_nonnormal(Rng& rng, std::size_t n, double margin) {
  std::uniform_real_distribution<double> re(-2.0, -margin);
  std::uniform_real_distribution<double> im(0.2, 2.0);
  Matrix d(n, n);
  std::size_t i = 0;
  while (i < n) {
    if (i + 1 < n && std::bernoulli_distribution(0.5)(rng)) {
      const double a = re(rng);
      const double b = im(rng);
      d(i, i) = a;
      d(i, i + 1) = b;
      d(i + 1, i) = -b;
      d(i + 1, i + 1) = a;
      i += 2;
    } else {
      d(i, i) = re(rng);
      ++i;
    }
  }
  const Matrix t = random_well_conditioned(rng, n);
  return matmul(matmul(t, d), inverse(t));
}

Matrix random_boundary(Rng& rng, std::size_t n, double beta) {
  if (n < 2) throw DimensionError("random_boundary: requires n >= 2");
  std::uniform_real_distribution<double> re(-2.0, -0.1);
  Matrix d(n, n);
  d(0, 1) = beta;
  d(1, 0) = -beta;
  for (std::size_t i = 2; i < n; ++i) d(i, i) = re(rng);
  const Matrix t = random_well_conditioned(rng, n);
  return matmul(matmul(t, d), inverse(t));
}

}  // namespace guardian
