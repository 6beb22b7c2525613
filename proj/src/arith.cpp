#include "cheblab/arith.hpp"

#include <cmath>
#include <cstdlib>

namespace cheblab::arith {

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    const std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  if (m == 1) return 0;
  std::uint64_t r = 1;
  base %= m;
  while (e != 0) {
    if (e & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    e >>= 1;
  }
  return r;
}

namespace {

// base^k <= n, without overflow.
bool pow_le(std::uint64_t base, unsigned k, std::uint64_t n) {
  unsigned __int128 r = 1;
  for (unsigned i = 0; i < k; ++i) {
    r *= base;
    if (r > n) return false;
  }
  return true;
}

}  // namespace

std::uint64_t iroot(std::uint64_t n, unsigned k) {
  if (k == 0) return 0;
  if (k == 1 || n < 2) return n;
  auto r = static_cast<std::uint64_t>(std::pow(static_cast<long double>(n), 1.0L / k));
  while (r > 0 && !pow_le(r, k, n)) --r;
  while (pow_le(r + 1, k, n)) ++r;
  return r;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<PrimePower> factor(std::uint64_t n) {
  std::vector<PrimePower> out;
  for (std::uint64_t p = 2; p <= n / p; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (const auto& [p, e] : factor(n)) out.push_back(p);
  return out;
}

std::uint64_t totient(std::uint64_t n) {
  if (n == 0) return 0;
  std::uint64_t r = n;
  for (const auto& [p, e] : factor(n)) r = r / p * (p - 1);
  return r;
}

bool is_squarefree(std::uint64_t n) {
  if (n == 0) return false;
  for (const auto& [p, e] : factor(n)) {
    if (e > 1) return false;
  }
  return true;
}

int kronecker(std::int64_t a, std::int64_t n) {
  static constexpr int kTab2[8] = {0, 1, 0, -1, 0, -1, 0, 1};
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  if ((a & 1) == 0 && (n & 1) == 0) return 0;

  int k = 1;
  unsigned v = 0;
  while ((n & 1) == 0) {
    n /= 2;
    ++v;
  }
  if (v & 1) k = kTab2[a & 7];
  if (n < 0) {
    n = -n;
    if (a < 0) k = -k;
  }

  // Jacobi symbol (a/n), n odd positive.
  auto b = static_cast<std::uint64_t>(n);
  std::uint64_t r = mod_floor(a, b);
  while (r != 0) {
    v = 0;
    while ((r & 1) == 0) {
      r >>= 1;
      ++v;
    }
    if (v & 1) k *= kTab2[b & 7];
    if (r & b & 2) k = -k;
    const std::uint64_t t = b % r;
    b = r;
    r = t;
  }
  return b == 1 ? k : 0;
}

bool is_fundamental_discriminant(std::int64_t d) {
  if (d == 0 || d == 1) return false;
  const std::uint64_t r = mod_floor(d, 4);
  if (r == 1) return is_squarefree(static_cast<std::uint64_t>(std::llabs(d)));
  if (r == 0) {
    const std::int64_t m = d / 4;
    const std::uint64_t mr = mod_floor(m, 4);
    return (mr == 2 || mr == 3) && is_squarefree(static_cast<std::uint64_t>(std::llabs(m)));
  }
  return false;
}

std::vector<std::uint64_t> small_primes(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  if (limit < 2) return out;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

}  // namespace cheblab::arith
