#pragma once

#include <vector>

#include "guardian/matrix.hpp"

namespace guardian {

// Checks for the matrix ODE X' = A X + X A^T, whose flow is governed by A (+) A
// on all entries, by L_2(A) on the upper triangle of a symmetric X and by A^[2]
// on the strict upper triangle of a skew-symmetric X.

/// S_ij = E_ij - E_ji for 0-based i < j.
Matrix skew_basis_element(std::size_t n, std::size_t i, std::size_t j);

/// e^{a t} x0 e^{a^T t}.
Matrix matrix_ode_closed_form(const Matrix& a, const Matrix& x0, double t);

/// Classical RK4 with `steps` uniform steps on [0, t_end].
Matrix matrix_ode_rk4(const Matrix& a, const Matrix& x0, double t_end, int steps);

/// Default RK4 step count for t <= 2 and |a| <= 5.
inline constexpr int kDefaultRk4Steps = 1000;

/// Relative tolerance (times max(1, max|x|)) for the symmetry / skew preconditions.
inline constexpr double kStructureTol = 1e-8;

/// (x11, x12, ..., x1n, x22, ..., xnn) of a symmetric x.
std::vector<double> extract_w(const Matrix& x);
/// (x12, x13, ..., x1n, x23, ..., x_{n-1,n}) of a skew-symmetric x.
std::vector<double> extract_v(const Matrix& x);

Matrix symmetric_from_w(std::span<const double> w, std::size_t n);
Matrix skew_from_v(std::span<const double> v, std::size_t n);

/// max |A - A^T| and max |A + A^T|.
double asymmetry(const Matrix& x);
double skew_violation(const Matrix& x);

/// max |w(X(t)) - e^{L_2(a) t} w(X(0))| with X(t) from the closed form.
double check_prop6(const Matrix& a, const Matrix& x0_sym, double t);

/// max |v(X(t)) - e^{a^[2] t} v(X(0))| with X(t) from the closed form.
double check_prop7(const Matrix& a, const Matrix& x0_skew, double t);

/**
 * Compares the skew matrix spanned by column (i, j) of a^[2] in the S basis
 * with a S_ij + S_ij a^T, for 0-based i < j. Returns the max abs difference.
 */
double check_lemma1(const Matrix& a, std::size_t i, std::size_t j);

}  // namespace guardian
