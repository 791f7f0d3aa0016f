#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "guardian/matrix.hpp"

namespace guardian {

/// Binomial coefficient C(n, k); zero when k > n.
std::uint64_t binomial(std::size_t n, std::size_t k);

/**
 * Lexicographic enumeration of the k-subsets of {0, ..., n-1}.
 *
 * Subsets are strictly increasing index tuples; rank 0 is (0, ..., k-1) and the
 * last rank is (n-k, ..., n-1). Ranks are computed combinatorially, so no table
 * is materialized.
 */
class LexIndex {
 public:
  static constexpr std::size_t kMaxN = 32;

  LexIndex(std::size_t n, std::size_t k);

  [[nodiscard]] std::size_t n() const { return n_; }
  [[nodiscard]] std::size_t k() const { return k_; }
  [[nodiscard]] std::size_t size() const { return size_; }

  [[nodiscard]] std::vector<std::size_t> unrank(std::size_t rank) const;
  [[nodiscard]] std::size_t rank(std::span<const std::size_t> subset) const;

  /// All subsets in rank order.
  [[nodiscard]] std::vector<std::vector<std::size_t>> subsets() const;

 private:
  std::size_t n_;
  std::size_t k_;
  std::size_t size_;
};

/// Largest k accepted by the compound constructions.
inline constexpr std::size_t kMaxCompoundOrder = 12;

/// k-th multiplicative compound: all k-minors of a, rows and columns indexed lexicographically.
Matrix mult_compound(const Matrix& a, std::size_t k);

/// k-th additive compound, the first-order coefficient of (I + eps*a)^(k), evaluated exactly.
Matrix add_compound(const Matrix& a, std::size_t k);

/// Second additive compound assembled entrywise from the delta rule on lexicographic index pairs.
Matrix add_compound2_explicit(const Matrix& a);

/// max |(ab)^(k) - a^(k) b^(k)|.
double cauchy_binet_residual(const Matrix& a, const Matrix& b, std::size_t k);

}  // namespace guardian
