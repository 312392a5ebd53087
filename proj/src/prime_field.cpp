#include <array>
#include <stdexcept>

#include "r2m/prime_field.hpp"

namespace r2m {

namespace {

using u128 = unsigned __int128;

constexpr std::array<std::uint64_t, 16> kOraclePrimes = {
    859099442531261ULL,      2029534608224957ULL,     4449235430562733ULL,     7157854745448619ULL,
    17590474345836487ULL,    30779507894007161ULL,    55669823948389181ULL,    136379872486928633ULL,
    282037226423365393ULL,   516195792273053857ULL,   1083555119596696633ULL,  1988185896172062527ULL,
    4543536245805069727ULL,  3959762292044950319ULL,  1759675442401280981ULL,  971155962240552757ULL,
};

std::uint64_t reduce(std::int64_t v, std::uint64_t p) {
  if (v >= 0) return static_cast<std::uint64_t>(v) % p;
  const std::uint64_t r = (static_cast<std::uint64_t>(-(v + 1)) + 1) % p;
  return r == 0 ? 0 : p - r;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  while (exp) {
    if (exp & 1) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1;
  }
  return result;
}

}  // namespace

PrimeFieldScalar::PrimeFieldScalar(std::uint64_t modulus, std::int64_t value)
    : value_(reduce(value, modulus)), modulus_(modulus) {
  if (modulus < 2 || modulus >= (1ULL << 63)) throw std::invalid_argument("PrimeFieldScalar: modulus out of range");
}

PrimeFieldScalar PrimeFieldScalar::operator+(const PrimeFieldScalar& o) const {
  std::uint64_t s = value_ + o.value_;
  if (s >= modulus_) s -= modulus_;
  return {Raw{}, modulus_, s};
}

PrimeFieldScalar PrimeFieldScalar::operator-(const PrimeFieldScalar& o) const {
  return {Raw{}, modulus_, value_ >= o.value_ ? value_ - o.value_ : value_ + (modulus_ - o.value_)};
}

PrimeFieldScalar PrimeFieldScalar::operator*(const PrimeFieldScalar& o) const {
  return {Raw{}, modulus_, mul_mod(value_, o.value_, modulus_)};
}

PrimeFieldScalar PrimeFieldScalar::inverse() const {
  if (value_ == 0) throw std::domain_error("PrimeFieldScalar: inverse of zero");
  return {Raw{}, modulus_, pow_mod(value_, modulus_ - 2, modulus_)};
}

std::span<const std::uint64_t> oracle_primes() { return kOraclePrimes; }

std::size_t rank_mod_p(const IntMatrix& m, std::uint64_t p) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<PrimeFieldScalar> t;
  t.reserve(rows * cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) t.emplace_back(p, m(i, j));
  auto at = [&](std::size_t i, std::size_t j) -> PrimeFieldScalar& { return t[i * cols + j]; };

  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && at(piv, c).is_zero()) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(at(piv, j), at(r, j));
    const PrimeFieldScalar inv = at(r, c).inverse();
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (at(i, c).is_zero()) continue;
      const PrimeFieldScalar f = at(i, c) * inv;
      for (std::size_t j = c; j < cols; ++j) at(i, j) = at(i, j) - f * at(r, j);
    }
    ++r;
  }
  return r;
}

}  // namespace r2m
