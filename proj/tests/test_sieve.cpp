#include <doctest.h>

#include <array>
#include <cmath>
#include <random>

#include "cheblab/errors.hpp"
#include "cheblab/sieve.hpp"
#include "oracles/oracles.hpp"

using namespace cheblab;
using sieve::Interval;

namespace {

std::vector<std::uint64_t> oracle_primes(std::uint64_t N, std::uint64_t y) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = N + 1; n <= N + y; ++n) {
    if (oracle::is_prime_trial(n)) out.push_back(n);
  }
  return out;
}

Exec with(int workers, std::uint64_t seg) {
  Exec e;
  e.workers = workers;
  e.segment_size = seg;
  return e;
}

}  // namespace

TEST_CASE("interval construction") {
  CHECK_THROWS_AS(Interval::make(1, 0), ArgumentError);
  CHECK_THROWS_AS(Interval::make(UINT64_MAX - 3, 10), RangeError);
  const auto iv = Interval::make(90, 10);
  CHECK(iv.end() == 100);
  CHECK_FALSE(iv.contains(90));
  CHECK(iv.contains(100));
}

TEST_CASE("primes in small windows") {
  CHECK(sieve::primes_in(Interval::make(0, 10)) == std::vector<std::uint64_t>{2, 3, 5, 7});
  CHECK(sieve::primes_in(Interval::make(1, 1)) == std::vector<std::uint64_t>{2});
  CHECK(sieve::primes_in(Interval::make(90, 10)) == oracle_primes(90, 10));
  CHECK(sieve::primes_in(Interval::make(90, 10)) == std::vector<std::uint64_t>{97});
}

TEST_CASE("lambda events up to 10") {
  const auto ev = sieve::lambda_events(Interval::make(1, 9));
  const std::vector<std::array<std::uint64_t, 3>> want = {{2, 2, 1}, {3, 3, 1}, {4, 2, 2}, {5, 5, 1},
                                                          {7, 7, 1}, {8, 2, 3}, {9, 3, 2}};
  REQUIRE(ev.size() == want.size());
  for (std::size_t i = 0; i < ev.size(); ++i) {
    CHECK(ev[i].n == want[i][0]);
    CHECK(ev[i].p == want[i][1]);
    CHECK(ev[i].m == want[i][2]);
    CHECK(ev[i].weight == std::log(static_cast<double>(want[i][1])));
  }
  const auto w = sieve::lambda_events(Interval::make(100, 10));
  REQUIRE(w.size() == 4);
  CHECK(w[0].n == 101);
  CHECK(w[3].n == 109);
  for (const auto& e : w) CHECK(e.m == 1);
}

TEST_CASE("psi small values") {
  CHECK(sieve::psi(1) == 0.0);
  CHECK(sieve::psi(0) == 0.0);
  const double want = 3 * std::log(2.0) + 2 * std::log(3.0) + std::log(5.0) + std::log(7.0);
  CHECK(sieve::psi(10) == doctest::Approx(want).epsilon(1e-15));
  CHECK(sieve::psi(100000) == doctest::Approx(oracle::oracle_psi(100000)).epsilon(1e-12));
}

TEST_CASE("segmented sieve equals the serial reference on random windows") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    const std::uint64_t N = rng() % (trial < 20 ? 100000 : 10'000'000'000ULL);
    const std::uint64_t y = 1 + rng() % 50000;
    const auto iv = Interval::make(N, y);
    const auto ref = sieve::reference::lambda_events(iv);
    for (const auto& ex : {with(1, 1 << 18), with(3, 977), with(4, 64)}) {
      const auto got = sieve::lambda_events(iv, ex);
      REQUIRE(got.size() == ref.size());
      for (std::size_t i = 0; i < got.size(); ++i) {
        REQUIRE(got[i].n == ref[i].n);
        REQUIRE(got[i].p == ref[i].p);
        REQUIRE(got[i].m == ref[i].m);
      }
      CHECK(sieve::primes_in(iv, ex) == sieve::reference::primes_in(iv));
    }
  }
}

TEST_CASE("windows match trial division") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const std::uint64_t N = rng() % 900000;
    const std::uint64_t y = 1 + rng() % 2000;
    CHECK(sieve::primes_in(Interval::make(N, y)) == oracle_primes(N, y));
  }
}

TEST_CASE("psi_exact is additive over adjacent windows and worker-count independent") {
  const auto a = sieve::psi_exact(50000, with(1, 1000));
  const auto b = sieve::psi_exact(50000, with(4, 313));
  CHECK(a == b);
  ExactSum split;
  for (const auto& e : sieve::lambda_events(Interval::make(0, 20000))) split += ExactSum::from_weight(e.weight);
  for (const auto& e : sieve::lambda_events(Interval::make(20000, 30000))) split += ExactSum::from_weight(e.weight);
  CHECK(split == a);
}

TEST_CASE("windows near 10^15") {
  const auto iv = Interval::make(1'000'000'000'000'000ULL - 1000, 1000);
  const auto ps = sieve::primes_in(iv);
  REQUIRE_FALSE(ps.empty());
  CHECK(ps.back() == 999'999'999'999'989ULL);
  CHECK(ps == sieve::reference::primes_in(iv));
}
