#pragma once

#include "guardian/matrix.hpp"

namespace guardian {

/// Block matrix [a_ij * b].
Matrix kron_product(const Matrix& a, const Matrix& b);

/// a (x) I + I (x) b for square a (n x n) and b (m x m).
Matrix kron_sum(const Matrix& a, const Matrix& b);

/// a (+) a = a (x) I_n + I_n (x) a.
Matrix kron_sum_self(const Matrix& a);

// vec stacks ROWS, not columns. Under this convention
//   vec(A X) = (A (x) I) vec(X),   vec(X B^T) = (I (x) B) vec(X),
// so X' = A X + X A^T becomes vec(X)' = (A (+) A) vec(X).

/// (rows*cols) x 1 column holding the rows of x one after the other.
Matrix vec_rows(const Matrix& x);

/// Inverse of vec_rows.
Matrix unvec_rows(const Matrix& v, std::size_t rows, std::size_t cols);

}  // namespace guardian
