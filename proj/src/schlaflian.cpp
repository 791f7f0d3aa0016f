#include "guardian/schlaflian.hpp"

#include <cmath>
#include <string>

#include "guardian/compound.hpp"

namespace guardian {

namespace {

void fill_exponents(std::size_t var, std::size_t remaining, MonomialBasis::Exponent& cur,
                    std::vector<MonomialBasis::Exponent>& out) {
  if (var + 1 == cur.size()) {
    cur[var] = static_cast<unsigned>(remaining);
    out.push_back(cur);
    return;
  }
  for (std::size_t e = remaining + 1; e-- > 0;) {
    cur[var] = static_cast<unsigned>(e);
    fill_exponents(var + 1, remaining - e, cur, out);
  }
}

using Polynomial = std::map<MonomialBasis::Exponent, double>;

// Multiplies poly by the linear form sum_j row[j] z_j.
Polynomial times_linear(const Polynomial& poly, std::span<const double> row) {
  Polynomial out;
  for (const auto& [e, coeff] : poly) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j] == 0.0) continue;
      auto next = e;
      ++next[j];
      out[next] += coeff * row[j];
    }
  }
  return out;
}

void check_args(const Matrix& a, std::size_t p, const char* what) {
  if (!a.is_square()) throw DimensionError(std::string(what) + ": expected a square matrix");
  if (p < 1) throw DimensionError(std::string(what) + ": order p must be >= 1");
}

}  // namespace

MonomialBasis::MonomialBasis(std::size_t n, std::size_t p) : n_(n), p_(p) {
  if (n == 0 || p == 0) throw DimensionError("MonomialBasis: n and p must be positive");
  const std::uint64_t size = binomial(n + p - 1, p);
  if (size == 0 || size > kMaxSize) {
    throw DimensionError("MonomialBasis: dimension C(n+p-1,p)=" + std::to_string(size) + " exceeds cap " +
                         std::to_string(kMaxSize));
  }
  exponents_.reserve(size);
  Exponent cur(n, 0);
  fill_exponents(0, p, cur, exponents_);
  for (std::size_t i = 0; i < exponents_.size(); ++i) lookup_.emplace(exponents_[i], i);
}

std::size_t MonomialBasis::index_of(const Exponent& e) const {
  const auto it = lookup_.find(e);
  if (it == lookup_.end()) throw DimensionError("MonomialBasis: exponent not in basis");
  return it->second;
}

std::vector<double> s_p_eval(const MonomialBasis& basis, std::span<const double> z) {
  if (z.size() != basis.n()) throw DimensionError("s_p_eval: vector length does not match basis");
  std::vector<double> out;
  out.reserve(basis.size());
  for (const auto& e : basis.exponents()) {
    double v = 1.0;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (unsigned r = 0; r < e[i]; ++r) v *= z[i];
    out.push_back(v);
  }
  return out;
}

// Row e of U_p(a) holds the coefficients of prod_i (a z)_i^{e_i}, expanded into the basis.
Matrix upper_schlaflian(const Matrix& a, std::size_t p) {
  check_args(a, p, "upper_schlaflian");
  const MonomialBasis basis(a.rows(), p);
  Matrix u(basis.size(), basis.size());
  for (std::size_t row = 0; row < basis.size(); ++row) {
    const auto& e = basis.exponents()[row];
    Polynomial poly{{MonomialBasis::Exponent(a.rows(), 0), 1.0}};
    for (std::size_t i = 0; i < e.size(); ++i)
      for (unsigned r = 0; r < e[i]; ++r) poly = times_linear(poly, a.row(i));
    for (const auto& [mono, coeff] : poly) u(row, basis.index_of(mono)) += coeff;
  }
  return u;
}

// d/dt z^e = sum_i e_i z^{e - e_i} (sum_j a_ij z_j).
Matrix lower_schlaflian(const Matrix& a, std::size_t p) {
  check_args(a, p, "lower_schlaflian");
  const std::size_t n = a.rows();
  const MonomialBasis basis(n, p);
  Matrix l(basis.size(), basis.size());
  for (std::size_t row = 0; row < basis.size(); ++row) {
    const auto& e = basis.exponents()[row];
    for (std::size_t i = 0; i < n; ++i) {
      if (e[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (a(i, j) == 0.0) continue;
        auto target = e;
        --target[i];
        ++target[j];
        l(row, basis.index_of(target)) += e[i] * a(i, j);
      }
    }
  }
  return l;
}

}  // namespace guardian
