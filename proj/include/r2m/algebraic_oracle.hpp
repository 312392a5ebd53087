#pragma once

#include <cstdint>
#include <random>
#include <variant>
#include <vector>

#include "r2m/decision.hpp"
#include "r2m/matrix.hpp"

namespace r2m {

// x_ij = u_i v_j - u_j v_i for the skew-symmetric rank-2 model.
struct SkewPoint {
  std::vector<std::int64_t> u;
  std::vector<std::int64_t> v;
};

// A = a * b with a of size m x 2 and b of size 2 x n, both row-major.
struct RectPoint {
  int m = 0;
  int n = 0;
  std::vector<std::int64_t> a;
  std::vector<std::int64_t> b;

  std::int64_t a_at(int i, int k) const { return a[2 * i + k]; }
  std::int64_t b_at(int k, int j) const { return b[k * n + j]; }
};

using ParamPoint = std::variant<SkewPoint, RectPoint>;

inline constexpr std::int64_t kParamBound = std::int64_t{1} << 20;

// Entries uniform in [-2^20, 2^20] \ {0}.
SkewPoint sample_skew_point(int n, std::mt19937_64& rng);
RectPoint sample_rect_point(int m, int n, std::mt19937_64& rng);

// One row per observed entry. Skew columns: (u_1..u_n, v_1..v_n).
// Rect columns: a row-major, then b row-major.
IntMatrix jacobian_skew(int n, const std::vector<Edge>& s, const SkewPoint& p);
IntMatrix jacobian_rect(int m, int n, const std::vector<Cell>& cells, const RectPoint& p);

struct OracleResult {
  bool independent = false;
  std::vector<std::size_t> ranks;     // one per trial actually run
  std::vector<std::uint64_t> primes;  // prime used in each trial
};

inline constexpr int kDefaultTrials = 3;

// Randomized Jacobian rank test. A full-rank trial proves independence and
// stops the loop; "dependent" may be wrong with tiny probability. Each
// trial draws its point and prime from its own stream derived from seed.
OracleResult oracle_decide_skew(int n, const std::vector<Edge>& s, int trials = kDefaultTrials,
                                std::uint64_t seed = 0);
OracleResult oracle_decide_rect(int m, int n, const std::vector<Cell>& cells, int trials = kDefaultTrials,
                                std::uint64_t seed = 0);

// B = (u1; v2^T)(u2^T v1) - (u2; v1^T)(u1^T v2) with u1, u2 the columns of
// a and v1 = b row 1, v2 = -(b row 2), so that u1 v1 - u2 v2 = a b.
// B is (m+n) x (m+n), skew-symmetric, rank <= 2, and its upper-right m x n
// block equals A.
RationalMatrix skew_embedding(const RectPoint& factors);

// The matrix A = a b itself.
RationalMatrix rect_product(const RectPoint& factors);

// Stream for trial `trial` of a run seeded with `seed`.
std::mt19937_64 trial_stream(std::uint64_t seed, std::uint64_t trial);

}  // namespace r2m
