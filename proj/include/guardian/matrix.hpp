#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace guardian {

/// Thrown when operand shapes or integer parameters violate an operation's precondition.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when an iterative routine fails to converge within its iteration cap.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/**
 * Dense real matrix with row-major storage.
 *
 * Entries are validated finite on construction; every operation in the
 * library returns a new value, so a Matrix is never mutated behind a caller's back.
 */
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<double> data);
  Matrix(std::initializer_list<std::initializer_list<double>> rows);

  static Matrix identity(std::size_t n);
  static Matrix zeros(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  static Matrix diagonal(std::span<const double> diag);
  static Matrix diagonal(std::initializer_list<double> diag);
  static Matrix column(std::span<const double> values);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] bool is_square() const { return rows_ == cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  [[nodiscard]] std::span<const double> data() const { return data_; }
  [[nodiscard]] std::span<const double> row(std::size_t i) const {
    return std::span<const double>(data_).subspan(i * cols_, cols_);
  }

  [[nodiscard]] Matrix transpose() const;
  [[nodiscard]] double trace() const;
  /// Largest absolute entry.
  [[nodiscard]] double max_abs() const;
  /// Maximum absolute column sum.
  [[nodiscard]] double norm1() const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(double s);

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator-(Matrix a);
Matrix operator*(Matrix a, double s);
Matrix operator*(double s, Matrix a);
Matrix operator*(const Matrix& a, const Matrix& b);

Matrix matmul(const Matrix& a, const Matrix& b);

/// Largest absolute entrywise difference; shapes must agree.
double max_abs_diff(const Matrix& a, const Matrix& b);

/// Sign and natural-log magnitude of a determinant.
struct GuardianValue {
  int sign = 0;
  double log_magnitude = 0.0;

  [[nodiscard]] bool is_zero() const { return sign == 0; }
  /// sign * exp(log_magnitude); under/overflows for extreme magnitudes.
  [[nodiscard]] double value() const;
  static GuardianValue zero();
};

/// Product of two determinants, carried in sign/log form.
GuardianValue operator*(const GuardianValue& a, const GuardianValue& b);

/// Relative pivot threshold below which a determinant is reported as zero.
inline constexpr double kZeroPivotRelTol = 1e-12;

/**
 * Determinant of a square matrix via completely pivoted LU.
 *
 * The sign is zero when some pivot magnitude falls below
 * kZeroPivotRelTol * scale. With scale <= 0 the matrix's own largest absolute
 * entry is used.
 */
GuardianValue det_signed_log(const Matrix& a, double scale = 0.0);

/// LU factorization with complete pivoting, P a Q = L U, stored compactly.
class LuDecomposition {
 public:
  explicit LuDecomposition(const Matrix& a);

  [[nodiscard]] std::size_t size() const { return lu_.rows(); }
  /// Smallest |pivot|, useful for judging near-singularity.
  [[nodiscard]] double min_pivot() const;
  [[nodiscard]] bool singular() const { return min_pivot() == 0.0; }
  [[nodiscard]] int permutation_sign() const { return perm_sign_; }
  [[nodiscard]] const Matrix& packed() const { return lu_; }

  /// Solves a * x = b column by column. Throws DimensionError if a pivot is exactly zero.
  [[nodiscard]] Matrix solve(const Matrix& b) const;
  [[nodiscard]] Matrix inverse() const;

 private:
  Matrix lu_;
  std::vector<std::size_t> perm_;
  std::vector<std::size_t> col_perm_;
  int perm_sign_ = 1;
};

Matrix inverse(const Matrix& a);

/// e^{a t}.
Matrix expm(const Matrix& a, double t = 1.0);

/// Eigenvalues of a real square matrix, in solver order.
struct Spectrum {
  std::vector<std::complex<double>> eigenvalues;

  [[nodiscard]] std::size_t size() const { return eigenvalues.size(); }
  [[nodiscard]] double max_real() const;
};

Spectrum spectrum(const Matrix& a);

/// Default per-pair tolerance for multiset eigenvalue comparison: 1e-7 * (1 + scale_norm1).
double pairing_tolerance(double scale_norm1);

/**
 * Greedy nearest-neighbour multiset match. Each expected value is paired with
 * the closest unused computed value; returns the largest pairing distance, or
 * +inf when the sizes differ.
 */
double multiset_distance(std::span<const std::complex<double>> computed,
                         std::span<const std::complex<double>> expected);

bool spectra_match(std::span<const std::complex<double>> computed,
                   std::span<const std::complex<double>> expected, double tol);

enum class Stability { Stable, Boundary, Unstable };

std::string to_string(Stability s);

/// Classifies a spectral abscissa: stable if < -tol, boundary if within tol of zero.
Stability classify_abscissa(double max_real, double tol);

/// Spectral-abscissa classification: stable if max Re < -tol, boundary if |max Re| <= tol.
Stability is_hurwitz(const Matrix& a, double tol);

}  // namespace guardian
