#include "guardian/ode_checks.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "guardian/compound.hpp"
#include "guardian/schlaflian.hpp"

namespace guardian {

namespace {

void require_square_pair(const Matrix& a, const Matrix& x, const char* what) {
  if (!a.is_square() || !x.is_square() || a.rows() != x.rows()) {
    throw DimensionError(std::string(what) + ": a and x must be square of equal size");
  }
}

Matrix rhs(const Matrix& a, const Matrix& at, const Matrix& x) { return matmul(a, x) + matmul(x, at); }

double max_abs_vec_diff(std::span<const double> a, std::span<const double> b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

std::vector<double> mat_vec(const Matrix& m, std::span<const double> v) {
  std::vector<double> out(m.rows(), 0.0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
  return out;
}

}  // namespace

Matrix skew_basis_element(std::size_t n, std::size_t i, std::size_t j) {
  if (!(i < j && j < n)) throw DimensionError("skew_basis_element: need 0 <= i < j < n");
  Matrix s(n, n);
  s(i, j) = 1.0;
  s(j, i) = -1.0;
  return s;
}

Matrix matrix_ode_closed_form(const Matrix& a, const Matrix& x0, double t) {
  require_square_pair(a, x0, "matrix_ode_closed_form");
  const Matrix e = expm(a, t);
  return matmul(matmul(e, x0), e.transpose());
}

Matrix matrix_ode_rk4(const Matrix& a, const Matrix& x0, double t_end, int steps) {
  require_square_pair(a, x0, "matrix_ode_rk4");
  if (steps < 1) throw DimensionError("matrix_ode_rk4: steps must be positive");
  const Matrix at = a.transpose();
  const double h = t_end / steps;
  Matrix x = x0;
  for (int s = 0; s < steps; ++s) {
    const Matrix k1 = rhs(a, at, x);
    const Matrix k2 = rhs(a, at, x + (0.5 * h) * k1);
    const Matrix k3 = rhs(a, at, x + (0.5 * h) * k2);
    const Matrix k4 = rhs(a, at, x + h * k3);
    x += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return x;
}

double asymmetry(const Matrix& x) { return max_abs_diff(x, x.transpose()); }

double skew_violation(const Matrix& x) {
  if (!x.is_square()) throw DimensionError("skew_violation: expected a square matrix");
  return (x + x.transpose()).max_abs();
}

std::vector<double> extract_w(const Matrix& x) {
  if (!x.is_square()) throw DimensionError("extract_w: expected a square matrix");
  if (asymmetry(x) > kStructureTol * std::max(1.0, x.max_abs())) {
    throw DimensionError("extract_w: matrix is not symmetric");
  }
  const std::size_t n = x.rows();
  std::vector<double> w;
  w.reserve(n * (n + 1) / 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) w.push_back(x(i, j));
  return w;
}

std::vector<double> extract_v(const Matrix& x) {
  if (!x.is_square()) throw DimensionError("extract_v: expected a square matrix");
  if (skew_violation(x) > kStructureTol * std::max(1.0, x.max_abs())) {
    throw DimensionError("extract_v: matrix is not skew-symmetric");
  }
  const std::size_t n = x.rows();
  std::vector<double> v;
  v.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) v.push_back(x(i, j));
  return v;
}

Matrix symmetric_from_w(std::span<const double> w, std::size_t n) {
  if (w.size() != n * (n + 1) / 2) throw DimensionError("symmetric_from_w: length mismatch");
  Matrix x(n, n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j, ++k) x(i, j) = x(j, i) = w[k];
  return x;
}

Matrix skew_from_v(std::span<const double> v, std::size_t n) {
  if (n < 1 || v.size() != n * (n - 1) / 2) throw DimensionError("skew_from_v: length mismatch");
  Matrix x(n, n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j, ++k) {
      x(i, j) = v[k];
      x(j, i) = -v[k];
    }
  return x;
}

double check_prop6(const Matrix& a, const Matrix& x0_sym, double t) {
  require_square_pair(a, x0_sym, "check_prop6");
  const auto w0 = extract_w(x0_sym);
  const auto w_flow = extract_w(matrix_ode_closed_form(a, x0_sym, t));
  const auto w_lin = mat_vec(expm(lower_schlaflian(a, 2), t), w0);
  return max_abs_vec_diff(w_flow, w_lin);
}

double check_prop7(const Matrix& a, const Matrix& x0_skew, double t) {
  require_square_pair(a, x0_skew, "check_prop7");
  if (a.rows() < 2) throw DimensionError("check_prop7: requires n >= 2");
  const auto v0 = extract_v(x0_skew);
  const auto v_flow = extract_v(matrix_ode_closed_form(a, x0_skew, t));
  const auto v_lin = mat_vec(expm(add_compound(a, 2), t), v0);
  return max_abs_vec_diff(v_flow, v_lin);
}

double check_lemma1(const Matrix& a, std::size_t i, std::size_t j) {
  if (!a.is_square()) throw DimensionError("check_lemma1: expected a square matrix");
  const std::size_t n = a.rows();
  if (!(i < j && j < n)) throw DimensionError("check_lemma1: need 0 <= i < j < n");
  const Matrix compound = add_compound(a, 2);
  const LexIndex index(n, 2);
  const std::size_t col = index.rank(std::vector<std::size_t>{i, j});
  // The S-basis map sends the lexicographic unit vector of pair (k, l) to S_kl.
  Matrix lhs(n, n);
  for (std::size_t r = 0; r < index.size(); ++r) {
    const double c = compound(r, col);
    if (c == 0.0) continue;
    const auto kl = index.unrank(r);
    lhs += c * skew_basis_element(n, kl[0], kl[1]);
  }
  const Matrix s = skew_basis_element(n, i, j);
  const Matrix rhs_m = matmul(a, s) + matmul(s, a.transpose());
  return max_abs_diff(lhs, rhs_m);
}

}  // namespace guardian
