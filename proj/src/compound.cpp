#include "guardian/compound.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace guardian {

namespace {

double minor_det(const Matrix& a, std::span<const std::size_t> rows, std::span<const std::size_t> cols) {
  const std::size_t k = rows.size();
  auto at = [&](std::size_t i, std::size_t j) { return a(rows[i], cols[j]); };
  switch (k) {
    case 1:
      return at(0, 0);
    case 2:
      return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
    case 3:
      return at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
             at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
             at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
    default: {
      Matrix sub(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) sub(i, j) = at(i, j);
      const LuDecomposition lu(sub);
      double det = lu.permutation_sign();
      for (std::size_t i = 0; i < k; ++i) det *= lu.packed()(i, i);
      return det;
    }
  }
}

void check_order(std::size_t k, std::size_t limit, const char* what) {
  if (k < 1 || k > limit || k > kMaxCompoundOrder) {
    throw DimensionError(std::string(what) + ": order k=" + std::to_string(k) + " out of range 1.." +
                         std::to_string(std::min(limit, kMaxCompoundOrder)));
  }
}

}  // namespace

std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    // r * (n-k+i) is divisible by i; saturate instead of wrapping.
    const unsigned __int128 next = static_cast<unsigned __int128>(r) * (n - k + i) / i;
    if (next > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
    r = static_cast<std::uint64_t>(next);
  }
  return r;
}

LexIndex::LexIndex(std::size_t n, std::size_t k) : n_(n), k_(k) {
  if (n == 0 || n > kMaxN) throw DimensionError("LexIndex: n must be in 1.." + std::to_string(kMaxN));
  if (k < 1 || k > n) throw DimensionError("LexIndex: k must be in 1..n");
  size_ = static_cast<std::size_t>(binomial(n, k));
}

// Lexicographic rank equals size-1 minus the colex rank of the complemented tuple (n-1-c_i).
std::size_t LexIndex::rank(std::span<const std::size_t> subset) const {
  if (subset.size() != k_) throw DimensionError("LexIndex::rank: subset has wrong size");
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < k_; ++i) {
    if (subset[i] >= n_ || (i > 0 && subset[i] <= subset[i - 1])) {
      throw DimensionError("LexIndex::rank: subset is not strictly increasing within range");
    }
    acc += binomial(n_ - 1 - subset[i], k_ - i);
  }
  return size_ - 1 - static_cast<std::size_t>(acc);
}

std::vector<std::size_t> LexIndex::unrank(std::size_t r) const {
  if (r >= size_) throw DimensionError("LexIndex::unrank: rank out of range");
  std::vector<std::size_t> out(k_);
  std::size_t next = 0;
  for (std::size_t i = 0; i < k_; ++i) {
    // Count subsets that start with each candidate element and skip whole blocks.
    for (std::size_t c = next;; ++c) {
      const auto block = static_cast<std::size_t>(binomial(n_ - 1 - c, k_ - 1 - i));
      if (r < block) {
        out[i] = c;
        next = c + 1;
        break;
      }
      r -= block;
    }
  }
  return out;
}

std::vector<std::vector<std::size_t>> LexIndex::subsets() const {
  std::vector<std::vector<std::size_t>> all;
  all.reserve(size_);
  std::vector<std::size_t> cur(k_);
  for (std::size_t i = 0; i < k_; ++i) cur[i] = i;
  while (true) {
    all.push_back(cur);
    std::size_t i = k_;
    while (i > 0 && cur[i - 1] == n_ - k_ + (i - 1)) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k_; ++j) cur[j] = cur[j - 1] + 1;
  }
  return all;
}

Matrix mult_compound(const Matrix& a, std::size_t k) {
  check_order(k, std::min(a.rows(), a.cols()), "mult_compound");
  const LexIndex row_index(a.rows(), k);
  const LexIndex col_index(a.cols(), k);
  const auto row_sets = row_index.subsets();
  const auto col_sets = col_index.subsets();
  Matrix c(row_sets.size(), col_sets.size());
  for (std::size_t i = 0; i < row_sets.size(); ++i)
    for (std::size_t j = 0; j < col_sets.size(); ++j) c(i, j) = minor_det(a, row_sets[i], col_sets[j]);
  return c;
}

// Entry (I, J) is nonzero only if I and J differ in at most one element. For
// I = S + {p}, J = S + {q} with p at position l of I and q at position m of J,
// the entry is (-1)^(l+m) a_pq; the diagonal carries the sum of a_ii over I.
Matrix add_compound(const Matrix& a, std::size_t k) {
  if (!a.is_square()) throw DimensionError("add_compound: expected a square matrix");
  const std::size_t n = a.rows();
  check_order(k, n, "add_compound");
  const LexIndex index(n, k);
  const auto sets = index.subsets();
  Matrix c(sets.size(), sets.size());
  std::vector<bool> member(n);
  std::vector<std::size_t> replaced(k);
  for (std::size_t row = 0; row < sets.size(); ++row) {
    const auto& set = sets[row];
    std::fill(member.begin(), member.end(), false);
    double diag = 0.0;
    for (std::size_t idx : set) {
      member[idx] = true;
      diag += a(idx, idx);
    }
    c(row, row) = diag;
    for (std::size_t l = 0; l < k; ++l) {
      const std::size_t p = set[l];
      for (std::size_t q = 0; q < n; ++q) {
        if (member[q]) continue;
        std::size_t out = 0;
        std::size_t m = 0;
        bool placed = false;
        for (std::size_t pos = 0; pos < k; ++pos) {
          if (pos == l) continue;
          if (!placed && q < set[pos]) {
            m = out;
            replaced[out++] = q;
            placed = true;
          }
          replaced[out++] = set[pos];
        }
        if (!placed) {
          m = out;
          replaced[out++] = q;
        }
        const std::size_t col = index.rank(replaced);
        c(row, col) = ((l + m) % 2 == 0 ? 1.0 : -1.0) * a(p, q);
      }
    }
  }
  return c;
}

Matrix add_compound2_explicit(const Matrix& a) {
  if (!a.is_square()) throw DimensionError("add_compound2_explicit: expected a square matrix");
  const std::size_t n = a.rows();
  if (n < 2) throw DimensionError("add_compound2_explicit: requires n >= 2");
  const auto pairs = LexIndex(n, 2).subsets();
  Matrix c(pairs.size(), pairs.size());
  auto delta = [](std::size_t i, std::size_t j) { return i == j ? 1.0 : 0.0; };
  for (std::size_t x = 0; x < pairs.size(); ++x) {
    const std::size_t i1 = pairs[x][0], i2 = pairs[x][1];
    for (std::size_t y = 0; y < pairs.size(); ++y) {
      const std::size_t j1 = pairs[y][0], j2 = pairs[y][1];
      c(x, y) = delta(i1, j1) * a(i2, j2) + delta(i2, j2) * a(i1, j1) - delta(i1, j2) * a(i2, j1) -
                delta(i2, j1) * a(i1, j2);
    }
  }
  return c;
}

double cauchy_binet_residual(const Matrix& a, const Matrix& b, std::size_t k) {
  if (a.cols() != b.rows()) throw DimensionError("cauchy_binet_residual: a.cols must equal b.rows");
  const Matrix lhs = mult_compound(matmul(a, b), k);
  const Matrix rhs = matmul(mult_compound(a, k), mult_compound(b, k));
  return max_abs_diff(lhs, rhs);
}

}  // namespace guardian
