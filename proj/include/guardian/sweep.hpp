#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "guardian/matrix.hpp"
#include "guardian/representations.hpp"

namespace guardian {

/// Thrown when a root bracket does not straddle a sign change.
class BracketError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A(theta) = base + theta * dir1 + theta^2 * dir2.
class ParamFamily {
 public:
  ParamFamily(Matrix base, Matrix dir1, std::optional<Matrix> dir2 = std::nullopt);

  [[nodiscard]] std::size_t n() const { return base_.rows(); }
  [[nodiscard]] const Matrix& base() const { return base_; }
  [[nodiscard]] const Matrix& dir1() const { return dir1_; }
  [[nodiscard]] const std::optional<Matrix>& dir2() const { return dir2_; }

  [[nodiscard]] Matrix at(double theta) const;
  /// dA/dtheta = dir1 + 2 theta dir2.
  [[nodiscard]] Matrix derivative(double theta) const;

 private:
  Matrix base_;
  Matrix dir1_;
  std::optional<Matrix> dir2_;
};

struct SweepSample {
  double theta = 0.0;
  GuardianReport report;
};

enum class CrossingType {
  SignChange,  ///< f changes sign between neighbouring samples
  GridZero,    ///< f vanishes at one or more consecutive grid samples
  Touch,       ///< f reaches zero without changing sign (even multiplicity)
};

std::string to_string(CrossingType t);

struct Crossing {
  CrossingType type = CrossingType::SignChange;
  double theta = 0.0;  ///< best estimate of the zero of f
  double lo = 0.0;     ///< final bracket
  double hi = 0.0;
  bool refined = false;
  /// Spectral abscissa of A at theta, theta - tol and theta + tol.
  double oracle_max_real = 0.0;
  double oracle_max_real_lo = 0.0;
  double oracle_max_real_hi = 0.0;
  /// Abscissa changes sign across the bracket or is within 1e-6 of zero at theta.
  bool oracle_confirms = false;

  [[nodiscard]] double width() const { return hi - lo; }
};

struct SweepOptions {
  bool refine = false;
  double tol = 1e-8;
  double oracle_tol = kDefaultOracleTol;
};

struct SweepResult {
  GuardianMapKind kind{};
  std::vector<SweepSample> samples;
  std::vector<Crossing> crossings;
  /// Grid points where |f| has a local minimum with equal neighbouring signs
  /// that refinement could not confirm as a zero of f.
  std::vector<double> unconfirmed_touches;
};

/**
 * Evaluates f = det(A) det rho(A) on a uniform grid of `samples` points in
 * [theta_min, theta_max] and brackets its zeros.
 *
 * Sign changes and zero samples are always reported. Interior local minima of
 * |f| with equal neighbouring signs are candidate even-order zeros; with
 * options.refine they are resolved by bisection on the sign of d/dtheta log|f|
 * and kept only if f falls below the zero threshold. Sign-change brackets are
 * bisected to options.tol when options.refine is set.
 */
SweepResult sweep(const ParamFamily& family, GuardianMapKind kind, double theta_min, double theta_max,
                  int samples, const SweepOptions& options = {});

/// Bisection on the sign of f until hi - lo <= tol. Throws BracketError if f(lo) f(hi) > 0.
Crossing refine_crossing(const ParamFamily& family, GuardianMapKind kind, double lo, double hi, double tol,
                         double oracle_tol = kDefaultOracleTol);

/**
 * Locates an even-order zero of f inside [lo, hi] by bisecting on the sign of
 * d/dtheta log|f| = tr(A^{-1} A') + tr(rho(A)^{-1} rho(A')). Returns nullopt
 * when the derivative does not change sign or f never reaches the zero threshold.
 */
std::optional<Crossing> refine_touch(const ParamFamily& family, GuardianMapKind kind, double lo, double hi,
                                     double tol, double oracle_tol = kDefaultOracleTol);

/// f(theta) as sign/log magnitude.
GuardianValue family_guardian(const ParamFamily& family, GuardianMapKind kind, double theta);

}  // namespace guardian
