#include <stdexcept>

#include "r2m/algebraic_oracle.hpp"
#include "r2m/prime_field.hpp"

namespace r2m {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Uniform integer in [0, bound) by rejection; independent of the standard
// library's distribution implementation so streams are portable.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  for (;;) {
    const std::uint64_t x = rng();
    if (x < limit) return x % bound;
  }
}

std::int64_t nonzero_entry(std::mt19937_64& rng) {
  constexpr auto span = static_cast<std::uint64_t>(2 * kParamBound);  // [-B, B] minus 0
  const auto k = static_cast<std::int64_t>(uniform_below(rng, span));
  return k < kParamBound ? k - kParamBound : k - kParamBound + 1;
}

std::uint64_t pick_prime(std::mt19937_64& rng) {
  const auto primes = oracle_primes();
  return primes[uniform_below(rng, primes.size())];
}

template <typename Jacobian>
OracleResult run_trials(std::size_t rows, int trials, std::uint64_t seed, Jacobian&& jacobian_at) {
  if (trials < 1) throw std::invalid_argument("oracle: at least one trial required");
  OracleResult result;
  for (int t = 0; t < trials; ++t) {
    std::mt19937_64 rng = trial_stream(seed, static_cast<std::uint64_t>(t));
    const IntMatrix j = jacobian_at(rng);
    const std::uint64_t p = pick_prime(rng);
    const std::size_t r = rank_mod_p(j, p);
    result.ranks.push_back(r);
    result.primes.push_back(p);
    if (r == rows) {
      result.independent = true;
      break;
    }
  }
  return result;
}

}  // namespace

std::mt19937_64 trial_stream(std::uint64_t seed, std::uint64_t trial) {
  return std::mt19937_64(splitmix64(splitmix64(seed) ^ trial));
}

SkewPoint sample_skew_point(int n, std::mt19937_64& rng) {
  SkewPoint p;
  for (int i = 0; i < n; ++i) p.u.push_back(nonzero_entry(rng));
  for (int i = 0; i < n; ++i) p.v.push_back(nonzero_entry(rng));
  return p;
}

RectPoint sample_rect_point(int m, int n, std::mt19937_64& rng) {
  RectPoint p;
  p.m = m;
  p.n = n;
  for (int i = 0; i < 2 * m; ++i) p.a.push_back(nonzero_entry(rng));
  for (int i = 0; i < 2 * n; ++i) p.b.push_back(nonzero_entry(rng));
  return p;
}

IntMatrix jacobian_skew(int n, const std::vector<Edge>& s, const SkewPoint& p) {
  if (static_cast<int>(p.u.size()) != n || static_cast<int>(p.v.size()) != n)
    throw std::invalid_argument("jacobian_skew: parameter point has wrong size");
  const PatternGraph g(n, s);
  IntMatrix j(g.edges().size(), 2 * static_cast<std::size_t>(n));
  for (std::size_t r = 0; r < g.edges().size(); ++r) {
    const auto [a, b] = g.edges()[r];
    j(r, a) = p.v[b];
    j(r, b) = -p.v[a];
    j(r, n + a) = -p.u[b];
    j(r, n + b) = p.u[a];
  }
  return j;
}

IntMatrix jacobian_rect(int m, int n, const std::vector<Cell>& cells, const RectPoint& p) {
  if (p.m != m || p.n != n) throw std::invalid_argument("jacobian_rect: parameter point has wrong shape");
  translate_rect(m, n, cells);  // validates
  IntMatrix j(cells.size(), 2 * static_cast<std::size_t>(m + n));
  const std::size_t b_offset = 2 * static_cast<std::size_t>(m);
  for (std::size_t r = 0; r < cells.size(); ++r) {
    const auto [row, col] = cells[r];
    for (int k = 0; k < 2; ++k) {
      j(r, 2 * row + k) = p.b_at(k, col);
      j(r, b_offset + k * n + col) = p.a_at(row, k);
    }
  }
  return j;
}

OracleResult oracle_decide_skew(int n, const std::vector<Edge>& s, int trials, std::uint64_t seed) {
  return run_trials(s.size(), trials, seed, [&](std::mt19937_64& rng) {
    return jacobian_skew(n, s, sample_skew_point(n, rng));
  });
}

OracleResult oracle_decide_rect(int m, int n, const std::vector<Cell>& cells, int trials, std::uint64_t seed) {
  return run_trials(cells.size(), trials, seed, [&](std::mt19937_64& rng) {
    return jacobian_rect(m, n, cells, sample_rect_point(m, n, rng));
  });
}

RationalMatrix rect_product(const RectPoint& f) {
  RationalMatrix a(f.m, f.n);
  for (int i = 0; i < f.m; ++i)
    for (int j = 0; j < f.n; ++j) {
      Rational sum = 0;
      for (int k = 0; k < 2; ++k) sum += Rational(static_cast<long>(f.a_at(i, k))) * static_cast<long>(f.b_at(k, j));
      a(i, j) = sum;
    }
  return a;
}

RationalMatrix skew_embedding(const RectPoint& f) {
  const int m = f.m, n = f.n, k = m + n;
  // x = (u1; v2^T), y = (u2; v1^T); B = x y^T - y x^T.
  std::vector<Rational> x(k), y(k);
  for (int i = 0; i < m; ++i) {
    x[i] = static_cast<long>(f.a_at(i, 0));
    y[i] = static_cast<long>(f.a_at(i, 1));
  }
  for (int j = 0; j < n; ++j) {
    x[m + j] = -static_cast<long>(f.b_at(1, j));
    y[m + j] = static_cast<long>(f.b_at(0, j));
  }
  RationalMatrix b(k, k);
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c) b(r, c) = x[r] * y[c] - y[r] * x[c];
  return b;
}

}  // namespace r2m
