#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>
#include <gmpxx.h>

namespace grlie {

// Exact rational scalar. mpq_class keeps denominators positive and
// fractions reduced, which is exactly the normalization we require.
using Scalar = mpq_class;
using Int = mpz_class;

inline bool is_zero(const Scalar& s) { return sgn(s) == 0; }

struct ResourceError : std::runtime_error {
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Arithmetic in F_p for a prime p < 2^31.
namespace fp {

inline std::uint32_t add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint32_t s = a + b;
  return s >= p ? s - p : s;
}

inline std::uint32_t sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return a >= b ? a - b : a + p - b;
}

inline std::uint32_t mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>((std::uint64_t)a * b % p);
}

inline std::uint32_t neg(std::uint32_t a, std::uint32_t p) {
  return a == 0 ? 0 : p - a;
}

std::uint32_t pow(std::uint32_t base, std::uint64_t e, std::uint32_t p);
std::uint32_t inv(std::uint32_t a, std::uint32_t p);

// Reduce a rational mod p.  Throws DomainError if the denominator
// vanishes mod p (caller should pick a different prime).
std::uint32_t reduce(const Scalar& s, std::uint32_t p);
std::uint32_t reduce_int(const Int& z, std::uint32_t p);
std::uint32_t reduce_ll(long long v, std::uint32_t p);

bool is_prime(std::uint32_t n);

// Deterministically derive `count` distinct 31-bit primes from a seed.
std::vector<std::uint32_t> random_primes(std::uint64_t seed, int count);

}  // namespace fp

}  // namespace grlie
