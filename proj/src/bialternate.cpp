#include "guardian/bialternate.hpp"

#include "guardian/compound.hpp"

namespace guardian {

PairListL::PairListL(std::size_t n) : n_(n) {
  if (n < 2) throw DimensionError("PairListL: requires n >= 2");
  pairs_.reserve(n * (n - 1) / 2);
  for (std::size_t q = 1; q < n; ++q)
    for (std::size_t p = q + 1; p <= n; ++p) pairs_.emplace_back(p, q);
}

std::vector<PairListL::Pair> PairListL::reversed() const {
  std::vector<Pair> out;
  out.reserve(pairs_.size());
  for (const auto& [p, q] : pairs_) out.emplace_back(q, p);
  return out;
}

Matrix bialternate_sum_self(const Matrix& a) {
  if (!a.is_square()) throw DimensionError("bialternate_sum_self: expected a square matrix");
  if (a.rows() < 2) throw DimensionError("bialternate_sum_self: requires n >= 2");
  const PairListL list(a.rows());
  const auto& pairs = list.pairs();
  // 1-based indices from the pair list.
  auto at = [&](std::size_t i, std::size_t j) { return a(i - 1, j - 1); };
  auto delta = [](std::size_t i, std::size_t j) { return i == j ? 1.0 : 0.0; };
  Matrix m(pairs.size(), pairs.size());
  for (std::size_t x = 0; x < pairs.size(); ++x) {
    const auto [p, q] = pairs[x];
    for (std::size_t y = 0; y < pairs.size(); ++y) {
      const auto [r, s] = pairs[y];
      m(x, y) = at(p, r) * delta(q, s) + at(q, s) * delta(p, r) - at(p, s) * delta(q, r) -
                at(q, r) * delta(p, s);
    }
  }
  return m;
}

double verify_prop4(const Matrix& a) { return max_abs_diff(bialternate_sum_self(a), add_compound(a, 2)); }

}  // namespace guardian
