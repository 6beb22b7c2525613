#include <algorithm>
#include <cmath>

#include "cheblab/arith.hpp"
#include "cheblab/sieve.hpp"

namespace cheblab::sieve::reference {

std::vector<std::uint64_t> primes_in(Interval iv) {
  const std::uint64_t lo = iv.start();
  const std::uint64_t hi = iv.end();
  std::vector<bool> is_prime(iv.length(), true);  // index i <-> lo + 1 + i
  for (std::uint64_t n = lo + 1; n < 2 && n <= hi; ++n) is_prime[n - lo - 1] = false;
  for (const std::uint64_t p : arith::small_primes(arith::isqrt(hi))) {
    std::uint64_t m = std::max(p * p, (lo / p + 1) * p);
    for (; m <= hi; m += p) is_prime[m - lo - 1] = false;
  }
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 0; i < iv.length(); ++i) {
    if (is_prime[i]) out.push_back(lo + 1 + i);
  }
  return out;
}

std::vector<LambdaEvent> lambda_events(Interval iv) {
  std::vector<LambdaEvent> out;
  for (const std::uint64_t p : reference::primes_in(iv)) out.push_back({p, p, 1, std::log(static_cast<double>(p))});
  for (const std::uint64_t p : arith::small_primes(arith::isqrt(iv.end()))) {
    std::uint64_t n = p;
    for (unsigned m = 2; n <= iv.end() / p; ++m) {
      n *= p;
      if (iv.contains(n)) out.push_back({n, p, m, std::log(static_cast<double>(p))});
    }
  }
  std::sort(out.begin(), out.end(), [](const LambdaEvent& a, const LambdaEvent& b) { return a.n < b.n; });
  return out;
}

}  // namespace cheblab::sieve::reference
