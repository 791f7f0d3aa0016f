#include "guardian/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

namespace guardian {

namespace {

void require_finite(std::span<const double> values) {
  for (double v : values) {
    if (!std::isfinite(v)) throw DimensionError("matrix entries must be finite");
  }
}

void require_square(const Matrix& a, const char* what) {
  if (!a.is_square()) {
    throw DimensionError(std::string(what) + ": expected a square matrix, got " +
                         std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  }
}

void require_same_shape(const Matrix& a, const Matrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError(std::string(what) + ": shape mismatch");
  }
}

Eigen::MatrixXd to_eigen(const Matrix& a) {
  Eigen::MatrixXd m(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  return m;
}

Matrix from_eigen(const Eigen::MatrixXd& m) {
  Matrix a(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) a(i, j) = m(i, j);
  return a;
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {
  if (rows == 0 || cols == 0) throw DimensionError("matrix dimensions must be positive");
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (rows == 0 || cols == 0) throw DimensionError("matrix dimensions must be positive");
  if (data_.size() != rows * cols) throw DimensionError("data length does not match rows*cols");
  require_finite(data_);
}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  if (rows_ == 0 || cols_ == 0) throw DimensionError("matrix dimensions must be positive");
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
  require_finite(data_);
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::diagonal(std::span<const double> diag) {
  Matrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  require_finite(diag);
  return m;
}

Matrix Matrix::diagonal(std::initializer_list<double> diag) {
  return diagonal(std::span<const double>(diag.begin(), diag.size()));
}

Matrix Matrix::column(std::span<const double> values) {
  return Matrix(values.size(), 1, std::vector<double>(values.begin(), values.end()));
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

double Matrix::trace() const {
  require_square(*this, "trace");
  double s = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) s += (*this)(i, i);
  return s;
}

double Matrix::max_abs() const {
  double m = 0.0;
  for (double v : data_) m = std::max(m, std::abs(v));
  return m;
}

double Matrix::norm1() const {
  double best = 0.0;
  for (std::size_t j = 0; j < cols_; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) s += std::abs((*this)(i, j));
    best = std::max(best, s);
  }
  return best;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  require_same_shape(*this, other, "operator+");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  require_same_shape(*this, other, "operator-");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(double s) {
  for (double& v : data_) v *= s;
  return *this;
}

Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
Matrix operator-(Matrix a) { return a *= -1.0; }
Matrix operator*(Matrix a, double s) { return a *= s; }
Matrix operator*(double s, Matrix a) { return a *= s; }
Matrix operator*(const Matrix& a, const Matrix& b) { return matmul(a, b); }

Matrix matmul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("matmul: inner dimensions differ (" + std::to_string(a.cols()) + " vs " +
                         std::to_string(b.rows()) + ")");
  }
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "max_abs_diff");
  double m = 0.0;
  const auto da = a.data();
  const auto db = b.data();
  for (std::size_t i = 0; i < da.size(); ++i) m = std::max(m, std::abs(da[i] - db[i]));
  return m;
}

double GuardianValue::value() const {
  if (sign == 0) return 0.0;
  return sign * std::exp(log_magnitude);
}

GuardianValue GuardianValue::zero() {
  return {0, -std::numeric_limits<double>::infinity()};
}

GuardianValue operator*(const GuardianValue& a, const GuardianValue& b) {
  if (a.is_zero() || b.is_zero()) return GuardianValue::zero();
  return {a.sign * b.sign, a.log_magnitude + b.log_magnitude};
}

LuDecomposition::LuDecomposition(const Matrix& a) : lu_(a), perm_(a.rows()), col_perm_(a.rows()) {
  require_square(a, "LU");
  const std::size_t n = a.rows();
  std::iota(perm_.begin(), perm_.end(), 0);
  std::iota(col_perm_.begin(), col_perm_.end(), 0);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pr = k;
    std::size_t pc = k;
    double best = -1.0;
    for (std::size_t i = k; i < n; ++i)
      for (std::size_t j = k; j < n; ++j)
        if (std::abs(lu_(i, j)) > best) {
          best = std::abs(lu_(i, j));
          pr = i;
          pc = j;
        }
    if (pr != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(lu_(k, j), lu_(pr, j));
      std::swap(perm_[k], perm_[pr]);
      perm_sign_ = -perm_sign_;
    }
    if (pc != k) {
      for (std::size_t i = 0; i < n; ++i) std::swap(lu_(i, k), lu_(i, pc));
      std::swap(col_perm_[k], col_perm_[pc]);
      perm_sign_ = -perm_sign_;
    }
    const double pivot = lu_(k, k);
    if (pivot == 0.0) break;  // the remaining block is exactly zero
    for (std::size_t i = k + 1; i < n; ++i) {
      const double factor = lu_(i, k) / pivot;
      lu_(i, k) = factor;
      if (factor == 0.0) continue;
      for (std::size_t j = k + 1; j < n; ++j) lu_(i, j) -= factor * lu_(k, j);
    }
  }
}

double LuDecomposition::min_pivot() const {
  double m = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < lu_.rows(); ++i) m = std::min(m, std::abs(lu_(i, i)));
  return m;
}

Matrix LuDecomposition::solve(const Matrix& b) const {
  const std::size_t n = lu_.rows();
  if (b.rows() != n) throw DimensionError("LU solve: right-hand side has wrong row count");
  if (singular()) throw DimensionError("LU solve: matrix is singular");
  Matrix x(n, b.cols());
  for (std::size_t c = 0; c < b.cols(); ++c) {
    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i) {
      double s = b(perm_[i], c);
      for (std::size_t j = 0; j < i; ++j) s -= lu_(i, j) * y[j];
      y[i] = s;
    }
    for (std::size_t i = n; i-- > 0;) {
      double s = y[i];
      for (std::size_t j = i + 1; j < n; ++j) s -= lu_(i, j) * y[j];
      y[i] = s / lu_(i, i);
    }
    for (std::size_t i = 0; i < n; ++i) x(col_perm_[i], c) = y[i];
  }
  return x;
}

Matrix LuDecomposition::inverse() const { return solve(Matrix::identity(lu_.rows())); }

Matrix inverse(const Matrix& a) { return LuDecomposition(a).inverse(); }

GuardianValue det_signed_log(const Matrix& a, double scale) {
  require_square(a, "det_signed_log");
  if (scale <= 0.0) scale = a.max_abs();
  const LuDecomposition lu(a);
  const double threshold = kZeroPivotRelTol * scale;
  int sign = lu.permutation_sign();
  double log_mag = 0.0;
  for (std::size_t i = 0; i < lu.size(); ++i) {
    const double p = lu.packed()(i, i);
    if (!(std::abs(p) >= threshold) || p == 0.0) return GuardianValue::zero();
    if (p < 0.0) sign = -sign;
    log_mag += std::log(std::abs(p));
  }
  return {sign, log_mag};
}

Matrix expm(const Matrix& a, double t) {
  require_square(a, "expm");
  if (!std::isfinite(t)) throw DimensionError("expm: time must be finite");
  const Eigen::MatrixXd scaled = to_eigen(a) * t;
  return from_eigen(scaled.exp());
}

double Spectrum::max_real() const {
  double m = -std::numeric_limits<double>::infinity();
  for (const auto& z : eigenvalues) m = std::max(m, z.real());
  return m;
}

Spectrum spectrum(const Matrix& a) {
  require_square(a, "spectrum");
  Eigen::EigenSolver<Eigen::MatrixXd> solver(to_eigen(a), /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    throw ConvergenceError("spectrum: QR iteration did not converge for " + std::to_string(a.rows()) +
                           "x" + std::to_string(a.rows()) + " matrix");
  }
  Spectrum s;
  s.eigenvalues.reserve(a.rows());
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) s.eigenvalues.push_back(solver.eigenvalues()[i]);
  return s;
}

double pairing_tolerance(double scale_norm1) { return 1e-7 * (1.0 + scale_norm1); }

double multiset_distance(std::span<const std::complex<double>> computed,
                         std::span<const std::complex<double>> expected) {
  if (computed.size() != expected.size()) return std::numeric_limits<double>::infinity();
  std::vector<bool> used(computed.size(), false);
  double worst = 0.0;
  for (const auto& e : expected) {
    std::size_t best = computed.size();
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < computed.size(); ++i) {
      if (used[i]) continue;
      const double d = std::abs(computed[i] - e);
      if (d < best_d) {
        best_d = d;
        best = i;
      }
    }
    used[best] = true;
    worst = std::max(worst, best_d);
  }
  return worst;
}

bool spectra_match(std::span<const std::complex<double>> computed,
                   std::span<const std::complex<double>> expected, double tol) {
  return multiset_distance(computed, expected) <= tol;
}

std::string to_string(Stability s) {
  switch (s) {
    case Stability::Stable: return "stable";
    case Stability::Boundary: return "boundary";
    case Stability::Unstable: return "unstable";
  }
  return "unknown";
}

Stability is_hurwitz(const Matrix& a, double tol) { return classify_abscissa(spectrum(a).max_real(), tol); }

Stability classify_abscissa(double m, double tol) {
  if (m < -tol) return Stability::Stable;
  if (std::abs(m) <= tol) return Stability::Boundary;
  return Stability::Unstable;
}

}  // namespace guardian
