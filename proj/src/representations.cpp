#include "guardian/representations.hpp"

#include <algorithm>

#include "guardian/bialternate.hpp"
#include "guardian/compound.hpp"
#include "guardian/kron.hpp"
#include "guardian/schlaflian.hpp"

namespace guardian {

std::string to_string(GuardianMapKind kind) {
  switch (kind) {
    case GuardianMapKind::KroneckerSum: return "kron";
    case GuardianMapKind::AdditiveCompound2: return "add2";
    case GuardianMapKind::LowerSchlaflian2: return "schlaflian2";
    case GuardianMapKind::Bialternate: return "bialt";
  }
  return "unknown";
}

std::optional<GuardianMapKind> parse_map_kind(std::string_view name) {
  if (name == "kron") return GuardianMapKind::KroneckerSum;
  if (name == "add2") return GuardianMapKind::AdditiveCompound2;
  if (name == "schlaflian2" || name == "l2") return GuardianMapKind::LowerSchlaflian2;
  if (name == "bialt") return GuardianMapKind::Bialternate;
  return std::nullopt;
}

std::size_t rho_dimension(GuardianMapKind kind, std::size_t n) {
  switch (kind) {
    case GuardianMapKind::KroneckerSum: return n * n;
    case GuardianMapKind::AdditiveCompound2:
    case GuardianMapKind::Bialternate: return n * (n - 1) / 2;
    case GuardianMapKind::LowerSchlaflian2: return n * (n + 1) / 2;
  }
  return 0;
}

Matrix lie_bracket(const Matrix& a, const Matrix& b) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows()) {
    throw DimensionError("lie_bracket: operands must be square of equal size");
  }
  return matmul(a, b) - matmul(b, a);
}

Matrix apply_rho(GuardianMapKind kind, const Matrix& a) {
  if (!a.is_square()) throw DimensionError("apply_rho: expected a square matrix");
  switch (kind) {
    case GuardianMapKind::KroneckerSum: return kron_sum_self(a);
    case GuardianMapKind::AdditiveCompound2: return add_compound(a, 2);
    case GuardianMapKind::LowerSchlaflian2: return lower_schlaflian(a, 2);
    case GuardianMapKind::Bialternate: return bialternate_sum_self(a);
  }
  throw DimensionError("apply_rho: unknown map kind");
}

double bracket_preservation_residual(GuardianMapKind kind, const Matrix& a, const Matrix& b) {
  const Matrix lhs = apply_rho(kind, lie_bracket(a, b));
  const Matrix rhs = lie_bracket(apply_rho(kind, a), apply_rho(kind, b));
  return max_abs_diff(lhs, rhs);
}

Matrix similarity_transform(const Matrix& rho_of_a, const Matrix& t) {
  if (!t.is_square() || t.rows() != rho_of_a.rows() || !rho_of_a.is_square()) {
    throw DimensionError("similarity_transform: dimensions do not match");
  }
  const LuDecomposition lu(t);
  if (lu.min_pivot() <= kZeroPivotRelTol * t.max_abs()) {
    throw DimensionError("similarity_transform: transform is singular");
  }
  return matmul(matmul(t, rho_of_a), lu.inverse());
}

Matrix contragradient(GuardianMapKind kind, const Matrix& a) { return apply_rho(kind, -a).transpose(); }

double contragradient_bracket_residual(GuardianMapKind kind, const Matrix& a, const Matrix& b) {
  const Matrix lhs = contragradient(kind, lie_bracket(a, b));
  const Matrix rhs = lie_bracket(contragradient(kind, a), contragradient(kind, b));
  return max_abs_diff(lhs, rhs);
}

std::string to_string(GuardianVerdict v) {
  switch (v) {
    case GuardianVerdict::NonzeroStable: return "nonzero_stable";
    case GuardianVerdict::ZeroBoundary: return "zero_boundary";
    case GuardianVerdict::NonzeroUnstable: return "nonzero_unstable";
    case GuardianVerdict::ZeroUnstable: return "zero_unstable";
  }
  return "unknown";
}

GuardianDeterminants guardian_determinants(GuardianMapKind kind, const Matrix& a) {
  const Matrix rho = apply_rho(kind, a);
  const double scale = std::max(a.max_abs(), rho.max_abs());
  GuardianDeterminants d;
  d.g = det_signed_log(rho, scale);
  d.det_a = det_signed_log(a, scale);
  d.f = d.det_a * d.g;
  return d;
}

GuardianReport guardian_evaluate(GuardianMapKind kind, const Matrix& a, double oracle_tol) {
  const auto d = guardian_determinants(kind, a);
  GuardianReport r;
  r.kind = kind;
  r.g_value = d.g;
  r.det_a = d.det_a;
  r.f_value = d.f;
  r.oracle_max_real = spectrum(a).max_real();
  r.oracle = classify_abscissa(r.oracle_max_real, oracle_tol);
  if (r.f_value.is_zero()) {
    r.verdict = r.oracle == Stability::Unstable ? GuardianVerdict::ZeroUnstable : GuardianVerdict::ZeroBoundary;
  } else {
    r.verdict = r.oracle_max_real < 0.0 ? GuardianVerdict::NonzeroStable : GuardianVerdict::NonzeroUnstable;
  }
  return r;
}

}  // namespace guardian
