#pragma once

#include <cstdint>
#include <vector>

// Elementary integer arithmetic shared by every module.
namespace cheblab::arith {

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t m);

// floor(n^(1/k)), exact.
std::uint64_t iroot(std::uint64_t n, unsigned k);
inline std::uint64_t isqrt(std::uint64_t n) { return iroot(n, 2); }

// Deterministic for all 64-bit inputs (fixed Miller-Rabin base set).
bool is_prime(std::uint64_t n);

struct PrimePower {
  std::uint64_t p;
  unsigned e;
};
// Trial division; intended for the small moduli and discriminants used here.
std::vector<PrimePower> factor(std::uint64_t n);
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

std::uint64_t totient(std::uint64_t n);
bool is_squarefree(std::uint64_t n);

// Kronecker symbol (a/n) for any integers, n != 0 allowed to be even or
// negative; (a/0) = 1 iff a = +-1.
int kronecker(std::int64_t a, std::int64_t n);

// d = 1 mod 4 squarefree, or d = 4m with m squarefree and m = 2, 3 mod 4;
// d = 1 is excluded.
bool is_fundamental_discriminant(std::int64_t d);

// Simple Eratosthenes up to limit inclusive.
std::vector<std::uint64_t> small_primes(std::uint64_t limit);

// Euclidean residue in [0, m).
inline std::uint64_t mod_floor(std::int64_t a, std::uint64_t m) {
  const auto sm = static_cast<std::int64_t>(m);
  std::int64_t r = a % sm;
  if (r < 0) r += sm;
  return static_cast<std::uint64_t>(r);
}

}  // namespace cheblab::arith
