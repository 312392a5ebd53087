#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "r2m/matrix.hpp"
#include "r2m/rational.hpp"

namespace r2m {

// Exact rank by fraction-free (Bareiss) elimination. Rational input is
// scaled row-wise to integers first.
std::size_t rank(const RationalMatrix& m);

// Integer input runs in 64-bit arithmetic and falls back to GMP integers
// as soon as an intermediate would overflow.
std::size_t rank(const IntMatrix& m);

struct AffineSolution {
  std::vector<Rational> particular;          // A * particular == b
  std::vector<std::vector<Rational>> kernel;  // basis of {x : A x = 0}
};

// Solves A x = b exactly. Returns nullopt when the system is inconsistent.
// Free variables are set to zero in the particular solution; each kernel
// vector is scaled so its first nonzero entry is positive.
// Throws std::invalid_argument if A.rows() != b.size().
std::optional<AffineSolution> solve_affine(const RationalMatrix& a, const std::vector<Rational>& b);

// Finds x with A x = b and x_i >= 0 for i in nonneg_indices, or nullopt
// when no such x exists. Exact phase-one simplex with Bland's rule; the
// witness is deterministic for a given input.
// Throws std::invalid_argument on dimension mismatch or an out-of-range index.
std::optional<std::vector<Rational>> feasible_nonneg(const RationalMatrix& a, const std::vector<Rational>& b,
                                                     std::span<const std::size_t> nonneg_indices);

}  // namespace r2m
