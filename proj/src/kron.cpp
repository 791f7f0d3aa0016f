#include "guardian/kron.hpp"

#include <vector>

namespace guardian {

Matrix kron_product(const Matrix& a, const Matrix& b) {
  Matrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const double aij = a(i, j);
      if (aij == 0.0) continue;
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) k(i * b.rows() + r, j * b.cols() + c) = aij * b(r, c);
    }
  return k;
}

Matrix kron_sum(const Matrix& a, const Matrix& b) {
  if (!a.is_square() || !b.is_square()) throw DimensionError("kron_sum: operands must be square");
  return kron_product(a, Matrix::identity(b.rows())) + kron_product(Matrix::identity(a.rows()), b);
}

Matrix kron_sum_self(const Matrix& a) {
  if (!a.is_square()) throw DimensionError("kron_sum_self: expected a square matrix");
  return kron_sum(a, a);
}

Matrix vec_rows(const Matrix& x) {
  const auto d = x.data();
  return Matrix(d.size(), 1, std::vector<double>(d.begin(), d.end()));
}

Matrix unvec_rows(const Matrix& v, std::size_t rows, std::size_t cols) {
  if (v.cols() != 1 || v.rows() != rows * cols) throw DimensionError("unvec_rows: length mismatch");
  const auto d = v.data();
  return Matrix(rows, cols, std::vector<double>(d.begin(), d.end()));
}

}  // namespace guardian
