#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <optional>
#include <span>
#include <type_traits>
#include <vector>

#include "cheblab/exact_sum.hpp"
#include "cheblab/exec.hpp"

namespace cheblab::sieve {

// The half-open window (start, start + length]. Every consumer downstream
// uses this convention so that window sums read psi(N + y) - psi(N).
class Interval {
 public:
  // Throws ArgumentError when length == 0, RangeError when start + length
  // does not fit in 64 bits.
  static Interval make(std::uint64_t start, std::uint64_t length);

  std::uint64_t start() const { return start_; }
  std::uint64_t length() const { return length_; }
  std::uint64_t end() const { return start_ + length_; }
  bool contains(std::uint64_t n) const { return n > start_ && n <= end(); }

 private:
  Interval(std::uint64_t start, std::uint64_t length) : start_(start), length_(length) {}

  std::uint64_t start_;
  std::uint64_t length_;
};

// n = p^m with von Mangoldt weight log p.
struct LambdaEvent {
  std::uint64_t n;
  std::uint64_t p;
  unsigned m;
  double weight;
};

std::vector<std::uint64_t> primes_in(Interval iv, const Exec& exec = {});
std::vector<LambdaEvent> lambda_events(Interval iv, const Exec& exec = {});

// sum_{n <= x} Lambda(n).
ExactSum psi_exact(std::uint64_t x, const Exec& exec = {});
double psi(std::uint64_t x, const Exec& exec = {});

namespace detail {

std::vector<std::uint64_t> base_primes_for(std::uint64_t hi);

// Appends the events of (lo, hi] in ascending n. base must hold every prime
// up to isqrt(hi).
void segment_events(std::uint64_t lo, std::uint64_t hi, std::span<const std::uint64_t> base,
                    std::vector<LambdaEvent>& out, std::vector<unsigned char>& scratch);

}  // namespace detail

// Sieves iv segment by segment. transform(std::span<const LambdaEvent>) runs
// on worker threads, one call per segment; consume(Out&) then runs on the
// calling thread for each segment in ascending order. Output is therefore
// identical for any worker count or segment size, as long as transform is
// a pure function of its segment.
template <class Transform, class Consume>
void for_each_segment(Interval iv, Transform&& transform, Consume&& consume, const Exec& exec = {}) {
  using Out = std::decay_t<std::invoke_result_t<Transform&, std::span<const LambdaEvent>>>;

  const std::vector<std::uint64_t> base = detail::base_primes_for(iv.end());
  const std::uint64_t seg = std::max<std::uint64_t>(exec.segment_size, 1);
  const std::uint64_t nseg = (iv.length() - 1) / seg + 1;
  const int workers = exec.resolved_workers();
  const std::uint64_t batch = static_cast<std::uint64_t>(workers) * 4;

  std::vector<std::optional<Out>> outs;
  for (std::uint64_t first = 0; first < nseg; first += batch) {
    const auto count = static_cast<std::int64_t>(std::min(batch, nseg - first));
    outs.clear();
    outs.resize(static_cast<std::size_t>(count));
    std::exception_ptr failure;

#pragma omp parallel num_threads(workers)
    {
      std::vector<LambdaEvent> events;
      std::vector<unsigned char> scratch;
#pragma omp for schedule(dynamic, 1)
      for (std::int64_t i = 0; i < count; ++i) {
        const std::uint64_t lo = iv.start() + (first + static_cast<std::uint64_t>(i)) * seg;
        const std::uint64_t hi = lo + std::min(seg, iv.end() - lo);
        try {
          events.clear();
          detail::segment_events(lo, hi, base, events, scratch);
          outs[static_cast<std::size_t>(i)].emplace(transform(std::span<const LambdaEvent>(events)));
        } catch (...) {
#pragma omp critical(cheblab_segment_failure)
          if (!failure) failure = std::current_exception();
        }
      }
    }

    if (failure) std::rethrow_exception(failure);
    for (auto& o : outs) consume(*o);
  }
}

// Plain single-array sieve of the whole window; kept as the serial reference
// the parallel kernels are tested and benchmarked against.
namespace reference {

std::vector<std::uint64_t> primes_in(Interval iv);
std::vector<LambdaEvent> lambda_events(Interval iv);

}  // namespace reference

}  // namespace cheblab::sieve
