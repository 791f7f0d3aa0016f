#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "guardian/matrix.hpp"

namespace guardian {

/// The Lie algebra representations whose determinants guard Hurwitz stability.
enum class GuardianMapKind {
  KroneckerSum,       ///< a (+) a, n^2 x n^2
  AdditiveCompound2,  ///< a^[2], C(n,2) x C(n,2)
  LowerSchlaflian2,   ///< L_2(a), C(n+1,2) x C(n+1,2)
  Bialternate,        ///< a <> a, C(n,2) x C(n,2)
};

inline constexpr std::array kAllGuardianMapKinds{GuardianMapKind::KroneckerSum, GuardianMapKind::AdditiveCompound2,
                                                 GuardianMapKind::LowerSchlaflian2, GuardianMapKind::Bialternate};

std::string to_string(GuardianMapKind kind);
/// Accepts the CLI spellings: kron, add2, schlaflian2 (or l2), bialt.
std::optional<GuardianMapKind> parse_map_kind(std::string_view name);

/// Dimension of rho(a) for an n x n argument.
std::size_t rho_dimension(GuardianMapKind kind, std::size_t n);

Matrix lie_bracket(const Matrix& a, const Matrix& b);

Matrix apply_rho(GuardianMapKind kind, const Matrix& a);

/// max |rho([a,b]) - [rho(a), rho(b)]|.
double bracket_preservation_residual(GuardianMapKind kind, const Matrix& a, const Matrix& b);

/// t * rho_of_a * t^{-1}. Throws DimensionError for singular t.
Matrix similarity_transform(const Matrix& rho_of_a, const Matrix& t);

/// (rho(-a))^T.
Matrix contragradient(GuardianMapKind kind, const Matrix& a);

/// Bracket residual of the contragradient representation.
double contragradient_bracket_residual(GuardianMapKind kind, const Matrix& a, const Matrix& b);

/// ZeroUnstable: f vanishes but the spectrum lies partly in the open right half-plane
/// (f also vanishes off the boundary, e.g. when two real eigenvalues sum to zero).
enum class GuardianVerdict { NonzeroStable, ZeroBoundary, NonzeroUnstable, ZeroUnstable };

std::string to_string(GuardianVerdict v);

struct GuardianReport {
  GuardianMapKind kind{};
  GuardianValue g_value;  ///< det rho(a)
  GuardianValue det_a;
  GuardianValue f_value;  ///< det(a) * det rho(a)
  GuardianVerdict verdict{};
  Stability oracle{};
  double oracle_max_real = 0.0;
};

struct GuardianDeterminants {
  GuardianValue g;      ///< det rho(a)
  GuardianValue det_a;
  GuardianValue f;      ///< det(a) * g
};

/// Zero judgements use kZeroPivotRelTol relative to max(max|a|, max|rho(a)|).
GuardianDeterminants guardian_determinants(GuardianMapKind kind, const Matrix& a);

/// Default oracle tolerance on the spectral abscissa.
inline constexpr double kDefaultOracleTol = 1e-8;

/**
 * Evaluates g = det rho(a) and f = det(a) g.
 *
 * A vanishing f gives ZeroBoundary, or ZeroUnstable when the oracle finds the
 * abscissa above oracle_tol; otherwise the verdict takes its stable/unstable
 * side from the sign of the spectral abscissa, which is also attached as the
 * independent oracle verdict.
 */
GuardianReport guardian_evaluate(GuardianMapKind kind, const Matrix& a, double oracle_tol = kDefaultOracleTol);

}  // namespace guardian
