#pragma once

#include <cstdint>
#include <random>

#include "guardian/matrix.hpp"

namespace guardian {

using Rng = std::mt19937_64;

/// Deterministic generator for (seed, stream, index); no global state.
Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0, std::uint64_t index = 0);

/// Entries uniform in [lo, hi].
Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, double lo = -1.0, double hi = 1.0);

/// Integer entries uniform in [lo, hi].
Matrix random_integer_matrix(Rng& rng, std::size_t rows, std::size_t cols, int lo, int hi);

/// Random matrix with condition number bounded by construction (I + small perturbation, orthogonal mixing).
Matrix random_well_conditioned(Rng& rng, std::size_t n);

Matrix random_symmetric(Rng& rng, std::size_t n);
Matrix random_skew(Rng& rng, std::size_t n);

/// -(P^T P + eps I), P uniform in [-1, 1]; symmetric with spectrum <= -eps.
Matrix random_hurwitz(Rng& rng, std::size_t n, double eps = 0.5);

/**
 * T diag-block(D) T^{-1} with real and complex-pair blocks whose real parts lie
 * in [-2, -margin]; strictly Hurwitz with abscissa <= -margin, non-normal.
 */
Matrix random_hurwitz_nonnormal(Rng& rng, std::size_t n, double margin = 0.1);

/**
 * T blockdiag(rot(beta), D) T^{-1} with rot(beta) = [[0, beta], [-beta, 0]] and
 * D strictly Hurwitz diagonal; has the exact eigenvalue pair +-i beta. Requires n >= 2.
 */
Matrix random_boundary(Rng& rng, std::size_t n, double beta);

}  // namespace guardian
