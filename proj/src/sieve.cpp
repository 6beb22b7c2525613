#include "cheblab/sieve.hpp"

#include <cmath>
#include <limits>
#include <string>

#include <omp.h>

#include "cheblab/arith.hpp"
#include "cheblab/errors.hpp"

namespace cheblab {

int Exec::resolved_workers() const { return workers > 0 ? workers : omp_get_max_threads(); }

}  // namespace cheblab

namespace cheblab::sieve {

Interval Interval::make(std::uint64_t start, std::uint64_t length) {
  if (length == 0) throw ArgumentError("interval length must be at least 1");
  if (start > std::numeric_limits<std::uint64_t>::max() - length) {
    throw RangeError("interval end " + std::to_string(start) + " + " + std::to_string(length) +
                     " overflows 64 bits");
  }
  return Interval(start, length);
}

namespace detail {

std::vector<std::uint64_t> base_primes_for(std::uint64_t hi) { return arith::small_primes(arith::isqrt(hi)); }

void segment_events(std::uint64_t lo, std::uint64_t hi, std::span<const std::uint64_t> base,
                    std::vector<LambdaEvent>& out, std::vector<unsigned char>& scratch) {
  const std::size_t first = out.size();
  const std::uint64_t len = hi - lo;
  scratch.assign(len, 1);
  // scratch[i] <-> n = lo + 1 + i
  for (std::uint64_t n = lo + 1; n <= hi && n < 2; ++n) scratch[n - lo - 1] = 0;

  for (const std::uint64_t p : base) {
    if (p > hi / p) break;
    std::uint64_t start = p * p;
    if (start <= lo) start = (lo / p + 1) * p;
    for (std::uint64_t n = start; n <= hi; n += p) {
      scratch[n - lo - 1] = 0;
      if (n > hi - p) break;
    }
  }

  for (std::uint64_t i = 0; i < len; ++i) {
    if (scratch[i]) {
      const std::uint64_t n = lo + 1 + i;
      out.push_back({n, n, 1, std::log(static_cast<double>(n))});
    }
  }

  // Proper prime powers p^m, m >= 2: p ranges over (lo^(1/m), hi^(1/m)].
  bool any_power = false;
  for (unsigned m = 2; m < 64 && (std::uint64_t{1} << m) <= hi; ++m) {
    const std::uint64_t pmin = arith::iroot(lo, m) + 1;
    const std::uint64_t pmax = arith::iroot(hi, m);
    auto it = std::lower_bound(base.begin(), base.end(), pmin);
    for (; it != base.end() && *it <= pmax; ++it) {
      std::uint64_t n = 1;
      for (unsigned j = 0; j < m; ++j) n *= *it;
      out.push_back({n, *it, m, std::log(static_cast<double>(*it))});
      any_power = true;
    }
  }
  if (any_power) {
    std::sort(out.begin() + static_cast<std::ptrdiff_t>(first), out.end(),
              [](const LambdaEvent& a, const LambdaEvent& b) { return a.n < b.n; });
  }
}

}  // namespace detail

std::vector<std::uint64_t> primes_in(Interval iv, const Exec& exec) {
  std::vector<std::uint64_t> out;
  for_each_segment(
      iv,
      [](std::span<const LambdaEvent> events) {
        std::vector<std::uint64_t> ps;
        for (const auto& e : events) {
          if (e.m == 1) ps.push_back(e.n);
        }
        return ps;
      },
      [&](const std::vector<std::uint64_t>& ps) { out.insert(out.end(), ps.begin(), ps.end()); }, exec);
  return out;
}

std::vector<LambdaEvent> lambda_events(Interval iv, const Exec& exec) {
  std::vector<LambdaEvent> out;
  for_each_segment(
      iv, [](std::span<const LambdaEvent> events) { return std::vector<LambdaEvent>(events.begin(), events.end()); },
      [&](const std::vector<LambdaEvent>& evs) { out.insert(out.end(), evs.begin(), evs.end()); }, exec);
  return out;
}

ExactSum psi_exact(std::uint64_t x, const Exec& exec) {
  ExactSum total;
  if (x < 2) return total;
  for_each_segment(
      Interval::make(0, x),
      [](std::span<const LambdaEvent> events) {
        ExactSum s;
        for (const auto& e : events) s += ExactSum::from_weight(e.weight);
        return s;
      },
      [&](const ExactSum& s) { total += s; }, exec);
  return total;
}

double psi(std::uint64_t x, const Exec& exec) { return psi_exact(x, exec).value(); }

}  // namespace cheblab::sieve
