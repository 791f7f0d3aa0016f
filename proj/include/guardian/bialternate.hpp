#pragma once

#include <utility>
#include <vector>

#include "guardian/matrix.hpp"

namespace guardian {

/**
 * Ordered pair list used to index the bialternate sum.
 *
 * Pairs (p, q) with p > q (1-based), ordered by q then p:
 * (2,1), (3,1), ..., (n,1), (3,2), ..., (n,n-1). Reversing each pair gives
 * the lexicographic list (1,2), (1,3), ..., (n-1,n) position by position.
 */
class PairListL {
 public:
  using Pair = std::pair<std::size_t, std::size_t>;

  explicit PairListL(std::size_t n);

  [[nodiscard]] std::size_t n() const { return n_; }
  [[nodiscard]] std::size_t size() const { return pairs_.size(); }
  [[nodiscard]] const std::vector<Pair>& pairs() const { return pairs_; }
  /// Each pair with its components swapped, i.e. (q, p).
  [[nodiscard]] std::vector<Pair> reversed() const;

 private:
  std::size_t n_;
  std::vector<Pair> pairs_;
};

/// a <> a: entry (x, y) = a_pr d_qs + a_qs d_pr - a_ps d_qr - a_qr d_ps for pairs (p,q), (r,s) of L(n).
Matrix bialternate_sum_self(const Matrix& a);

/// max |bialternate_sum_self(a) - add_compound(a, 2)|.
double verify_prop4(const Matrix& a);

}  // namespace guardian
