#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "r2m/matrix.hpp"

namespace r2m {

// Element of Z/pZ for a prime p < 2^63.
class PrimeFieldScalar {
 public:
  PrimeFieldScalar(std::uint64_t modulus, std::int64_t value);

  std::uint64_t value() const { return value_; }
  std::uint64_t modulus() const { return modulus_; }
  bool is_zero() const { return value_ == 0; }

  PrimeFieldScalar operator+(const PrimeFieldScalar& o) const;
  PrimeFieldScalar operator-(const PrimeFieldScalar& o) const;
  PrimeFieldScalar operator*(const PrimeFieldScalar& o) const;
  PrimeFieldScalar inverse() const;  // throws std::domain_error on zero

  friend bool operator==(const PrimeFieldScalar& a, const PrimeFieldScalar& b) = default;

 private:
  struct Raw {};
  PrimeFieldScalar(Raw, std::uint64_t modulus, std::uint64_t value) : value_(value), modulus_(modulus) {}

  std::uint64_t value_;
  std::uint64_t modulus_;
};

// Fixed pool of primes between 2^50 and 2^62 used by the randomized oracle.
std::span<const std::uint64_t> oracle_primes();

// Rank of an integer matrix over the field with p elements.
std::size_t rank_mod_p(const IntMatrix& m, std::uint64_t p);

}  // namespace r2m
