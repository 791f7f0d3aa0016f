#pragma once

#include <map>
#include <span>
#include <vector>

#include "guardian/matrix.hpp"

namespace guardian {

/**
 * Degree-p monomials in n variables, z_1^{e_1} ... z_n^{e_n} with sum e_i = p.
 *
 * Listed so that higher powers of earlier variables come first; for n = 2,
 * p = 2 the order is (z1^2, z1 z2, z2^2), and for p = 2 in general it matches
 * the row-wise upper-triangle order (x11, x12, ..., x1n, x22, ..., xnn).
 */
class MonomialBasis {
 public:
  using Exponent = std::vector<unsigned>;

  /// Largest basis size accepted, C(n+p-1, p).
  static constexpr std::size_t kMaxSize = 5000;

  MonomialBasis(std::size_t n, std::size_t p);

  [[nodiscard]] std::size_t n() const { return n_; }
  [[nodiscard]] std::size_t p() const { return p_; }
  [[nodiscard]] std::size_t size() const { return exponents_.size(); }
  [[nodiscard]] const std::vector<Exponent>& exponents() const { return exponents_; }
  [[nodiscard]] std::size_t index_of(const Exponent& e) const;

 private:
  std::size_t n_;
  std::size_t p_;
  std::vector<Exponent> exponents_;
  std::map<Exponent, std::size_t> lookup_;
};

/// s_p(z): monomial values of z in basis order.
std::vector<double> s_p_eval(const MonomialBasis& basis, std::span<const double> z);

/// The matrix U with s_p(a z) = U s_p(z) for every z.
Matrix upper_schlaflian(const Matrix& a, std::size_t p);

/// The matrix L with d/dt s_p(z) = L s_p(z) along z' = a z.
Matrix lower_schlaflian(const Matrix& a, std::size_t p);

}  // namespace guardian
