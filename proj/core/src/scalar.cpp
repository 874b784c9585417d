#include "grlie/scalar.hpp"

#include <random>
#include <vector>

namespace grlie::fp {

std::uint32_t pow(std::uint32_t base, std::uint64_t e, std::uint32_t p) {
  std::uint64_t r = 1, b = base % p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

std::uint32_t inv(std::uint32_t a, std::uint32_t p) {
  if (a == 0) throw DomainError("fp::inv: zero");
  return pow(a, p - 2, p);
}

std::uint32_t reduce_int(const Int& z, std::uint32_t p) {
  Int r = z % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t reduce_ll(long long v, std::uint32_t p) {
  long long r = v % (long long)p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t reduce(const Scalar& s, std::uint32_t p) {
  std::uint32_t num = reduce_int(s.get_num(), p);
  std::uint32_t den = reduce_int(s.get_den(), p);
  if (den == 0) throw DomainError("fp::reduce: denominator divisible by p");
  return mul(num, inv(den, p), p);
}

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t q : {2u, 3u, 5u, 7u, 11u, 13u}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  // Deterministic Miller-Rabin for n < 3.2e9.
  std::uint32_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) { d >>= 1; ++s; }
  for (std::uint32_t a : {2u, 7u, 61u}) {
    std::uint64_t x = pow(a % n, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = x * x % n;
      if (x == n - 1) { composite = false; break; }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint32_t> random_primes(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<std::uint32_t> out;
  while ((int)out.size() < count) {
    std::uint32_t cand = static_cast<std::uint32_t>(rng() % (1u << 30)) | (1u << 30) | 1u;
    if (!is_prime(cand)) continue;
    bool dup = false;
    for (auto p : out) dup = dup || p == cand;
    if (!dup) out.push_back(cand);
  }
  return out;
}

}  // namespace grlie::fp
