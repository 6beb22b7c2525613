// Serial reference sieve vs the segmented OpenMP driver, plus the BV kernel at
// a few worker counts. Usage: bench_kernels [x]

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include <omp.h>

#include "cheblab/bv.hpp"
#include "cheblab/cheb_psi.hpp"
#include "cheblab/sieve.hpp"

using namespace cheblab;
using Clock = std::chrono::steady_clock;

namespace {

template <class F>
double time_it(F&& f) {
  const auto t0 = Clock::now();
  f();
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  const std::uint64_t x = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 10'000'000;
  const auto iv = sieve::Interval::make(0, x);
  const int max_workers = omp_get_max_threads();
  std::printf("x = %llu, hardware threads = %d\n", static_cast<unsigned long long>(x), max_workers);

  std::size_t n_ref = 0;
  const double t_ref = time_it([&] { n_ref = sieve::reference::lambda_events(iv).size(); });
  std::printf("%-28s %8.3f s  (%zu events)\n", "sieve reference (serial)", t_ref, n_ref);

  for (const int w : {1, 2, 4}) {
    Exec e;
    e.workers = w;
    std::size_t n = 0;
    const double t = time_it([&] { n = sieve::lambda_events(iv, e).size(); });
    std::printf("sieve segmented, %d workers %8.3f s  (%zu events)%s\n", w, t, n, n == n_ref ? "" : "  MISMATCH");
  }

  auto ctx = galois::GaloisContext::make("quadratic:5");
  const auto split = ctx.class_by_id("split");
  const bv::BVParams p{ctx, split, x / 10, 0.2, 0.05, 1.0, {}, {}, {}, true};
  for (const int w : {1, 2, 4}) {
    Exec e;
    e.workers = w;
    double ratio = 0;
    const double t = time_it([&] { ratio = bv::bv_error_sum(p, e).normalized_ratio; });
    std::printf("bv error sum, %d workers    %8.3f s  (ratio %.6f)\n", w, t, ratio);
  }
  return 0;
}
