#include <algorithm>
#include <optional>
#include <stdexcept>

#include "r2m/exact_linalg.hpp"

namespace r2m {

RationalMatrix to_rational(const IntMatrix& m) {
  RationalMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(static_cast<long>(m(i, j)));
  return r;
}

std::vector<Rational> multiply(const RationalMatrix& a, const std::vector<Rational>& x) {
  if (a.cols() != x.size()) throw std::invalid_argument("multiply: dimension mismatch");
  std::vector<Rational> y(a.rows(), Rational(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) != 0) y[i] += a(i, j) * x[j];
  return y;
}

namespace {

// Bareiss row echelon. Every entry below the current pivot row is a minor of
// the input, so each division is exact. Columns without a pivot are skipped.
std::size_t bareiss_rank(Matrix<BigInt> m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  BigInt prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c) == 0) ++p;
    if (p == rows) continue;
    m.swap_rows(p, r);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        m(i, j) = m(r, c) * m(i, j) - m(i, c) * m(r, j);
        mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), prev.get_mpz_t());
      }
      m(i, c) = 0;
    }
    prev = m(r, c);
    ++r;
  }
  return r;
}

// Same elimination in int64; nullopt on overflow.
std::optional<std::size_t> bareiss_rank_i64(IntMatrix m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  std::int64_t prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c) == 0) ++p;
    if (p == rows) continue;
    m.swap_rows(p, r);
    const std::int64_t pivot = m(r, c);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const std::int64_t lead = m(i, c);
      for (std::size_t j = c + 1; j < cols; ++j) {
        std::int64_t a, b, d;
        if (__builtin_mul_overflow(pivot, m(i, j), &a) || __builtin_mul_overflow(lead, m(r, j), &b) ||
            __builtin_sub_overflow(a, b, &d))
          return std::nullopt;
        m(i, j) = d / prev;
      }
      m(i, c) = 0;
    }
    prev = pivot;
    ++r;
  }
  return r;
}

Matrix<BigInt> to_big(const IntMatrix& m) {
  Matrix<BigInt> big(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) big(i, j) = static_cast<long>(m(i, j));
  return big;
}

}  // namespace

std::size_t rank(const IntMatrix& m) {
  if (auto r = bareiss_rank_i64(m)) return *r;
  return bareiss_rank(to_big(m));
}

std::size_t rank(const RationalMatrix& m) {
  Matrix<BigInt> scaled(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    BigInt l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      BigInt v = m(i, j).get_num() * l;
      mpz_divexact(scaled(i, j).get_mpz_t(), v.get_mpz_t(), m(i, j).get_den_mpz_t());
    }
  }
  return bareiss_rank(std::move(scaled));
}

std::optional<AffineSolution> solve_affine(const RationalMatrix& a, const std::vector<Rational>& b) {
  if (a.rows() != b.size()) throw std::invalid_argument("solve_affine: A.rows() != b.size()");
  const std::size_t rows = a.rows(), cols = a.cols();

  // Reduced row echelon form of [A | b].
  RationalMatrix t(rows, cols + 1);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) t(i, j) = a(i, j);
    t(i, cols) = b[i];
  }
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && t(p, c) == 0) ++p;
    if (p == rows) continue;
    t.swap_rows(p, r);
    const Rational inv = 1 / t(r, c);
    for (std::size_t j = c; j <= cols; ++j) t(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || t(i, c) == 0) continue;
      const Rational f = t(i, c);
      for (std::size_t j = c; j <= cols; ++j) t(i, j) -= f * t(r, j);
    }
    pivot_cols.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (t(i, cols) != 0) return std::nullopt;

  AffineSolution sol;
  sol.particular.assign(cols, Rational(0));
  for (std::size_t k = 0; k < pivot_cols.size(); ++k) sol.particular[pivot_cols[k]] = t(k, cols);

  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[f] = 1;
    for (std::size_t k = 0; k < pivot_cols.size(); ++k) v[pivot_cols[k]] = -t(k, f);
    auto lead = std::find_if(v.begin(), v.end(), [](const Rational& x) { return x != 0; });
    if (*lead < 0)
      for (auto& x : v) x = -x;
    sol.kernel.push_back(std::move(v));
  }
  return sol;
}

}  // namespace r2m
