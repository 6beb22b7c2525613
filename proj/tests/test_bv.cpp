#include <doctest.h>

#include <cmath>

#include "cheblab/arith.hpp"
#include "cheblab/bv.hpp"
#include "cheblab/cheb_psi.hpp"
#include "cheblab/errors.hpp"
#include "cheblab/sieve.hpp"
#include "oracles/oracles.hpp"

using namespace cheblab;
using galois::GaloisContext;

namespace {

bv::BVParams make(const char* spec, const char* cls, std::uint64_t x, double delta, double theta) {
  auto ctx = GaloisContext::make(spec);
  const auto c = ctx.class_by_id(cls);
  return bv::BVParams{std::move(ctx), c, x, delta, theta, 1.0, {}, {}, {}, true};
}

Exec workers(int n) {
  Exec e;
  e.workers = n;
  return e;
}

}  // namespace

TEST_CASE("parameter validation") {
  CHECK(bv::validate_params(1, 0.3, 0.03).ok);
  CHECK_FALSE(bv::validate_params(1, 0.41, 0.0).ok);
  CHECK(bv::validate_params(2, 0.0, 0.06).ok);
  CHECK_FALSE(bv::validate_params(2, 0.0, 0.07).ok);
  CHECK_FALSE(bv::validate_params(3, 0.2, 0.0).ok);
  CHECK_FALSE(bv::validate_params(1, -0.1, 0.0).ok);
}

TEST_CASE("sample grid") {
  const auto g = bv::sample_grid(1000, 100, {8, 8});
  CHECK(g.front().first == 500);
  CHECK(g.front().second == 1);
  CHECK(g.back() == std::make_pair<std::uint64_t, std::uint64_t>(1000, 100));
  CHECK(g.size() <= 65);
  CHECK(bv::sample_grid(1000, 100, {1, 1}).size() == 1);
  CHECK_THROWS_AS(bv::sample_grid(1000, 100, {0, 3}), ConfigError);
}

TEST_CASE("trivial context with Q = 1 reduces to the classical window error") {
  auto p = make("trivial", "identity", 100000, 0.2, 0.0);
  p.Q = 1;
  p.grid = {1, 1};
  const auto rep = bv::bv_error_sum(p);
  REQUIRE(rep.rows.size() == 1);
  const auto& r = rep.rows[0];
  CHECK(r.N_star == 100000);
  CHECK(r.y_star == rep.h);
  const double want = std::abs(oracle::oracle_window_psi(r.N_star, r.y_star) - static_cast<double>(r.y_star));
  CHECK(r.abs_error == doctest::Approx(want).epsilon(1e-9));
}

TEST_CASE("error sum agrees with a brute-force recomputation") {
  auto p = make("quadratic:5", "split", 20000, 0.2, 0.2);
  p.strict = false;
  p.grid = {4, 4};
  const auto rep = bv::bv_error_sum(p);
  const auto cells = bv::sample_grid(p.x, rep.h, p.grid);
  std::size_t row = 0;
  double total = 0.0;
  for (std::uint64_t q = 1; q <= rep.Q; ++q) {
    if (q % 5 == 0) continue;
    double worst = 0.0;
    for (std::uint64_t a = 0; a < q; ++a) {
      if (arith::gcd(a, q) != 1) continue;
      for (const auto& [N, y] : cells) {
        const double obs = oracle::oracle_window_psi_C(p.ctx, "split", N, y, q, a);
        worst = std::max(worst, std::abs(obs - 0.5 * static_cast<double>(y) / static_cast<double>(arith::totient(q))));
      }
    }
    REQUIRE(row < rep.rows.size());
    CHECK(rep.rows[row].q == q);
    CHECK(rep.rows[row].abs_error == doctest::Approx(worst).epsilon(1e-9));
    total += worst;
    ++row;
  }
  CHECK(row == rep.rows.size());
  CHECK(rep.total == doctest::Approx(total).epsilon(1e-9));
}

TEST_CASE("rows admitted and normalized ratio at the reference configuration") {
  const auto p = make("quadratic:5", "split", 100000, 0.2, 0.05);
  const auto rep = bv::bv_error_sum(p);
  std::uint64_t admitted = 0;
  for (std::uint64_t q = 1; q <= arith::iroot(100000, 20); ++q) admitted += q % 5 != 0;
  CHECK(rep.rows.size() == admitted);
  CHECK(rep.normalized_ratio < 1.0);
  CHECK(rep.normalized_ratio == doctest::Approx(rep.total * std::log(1e5) / static_cast<double>(rep.h)));
  CHECK(rep.grh_comparator == doctest::Approx(std::sqrt(1e5) * std::pow(std::log(1e5 * rep.Q), 2)));
}

TEST_CASE("configuration errors") {
  auto p = make("quadratic:5", "split", 100000, 0.5, 0.05);
  CHECK_THROWS_AS(bv::bv_error_sum(p), ConfigError);
  p.strict = false;
  p.Q = 100000;
  CHECK_THROWS_AS(bv::bv_error_sum(p), ConfigError);
  p.Q.reset();
  p.grid = {0, 8};
  CHECK_THROWS_AS(bv::bv_error_sum(p), ConfigError);
  auto s3 = make("cubic-s3:-1,-1", "transposition", 100000, 0.15, 0.0);
  CHECK_THROWS_AS(bv::bv_error_sum(s3), ConfigError);  // n_E = 3 caps delta below 2/15
}

TEST_CASE("worker count does not change the report") {
  auto p = make("cyclotomic:12", "5", 200000, 0.3, 0.02);
  p.strict = false;
  p.Q = 20;
  const auto a = bv::bv_error_sum(p, workers(1));
  const auto b = bv::bv_error_sum(p, workers(4));
  REQUIRE(a.rows.size() == b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    CHECK(a.rows[i].abs_error == b.rows[i].abs_error);
    CHECK(a.rows[i].a_star == b.rows[i].a_star);
    CHECK(a.rows[i].N_star == b.rows[i].N_star);
  }
  CHECK(a.total == b.total);
}

TEST_CASE("dyadic scan") {
  const auto p = make("quadratic:5", "split", 0, 0.2, 0.05);
  const auto one = bv::dyadic_scan(p, 10000, 10000);
  CHECK(one.size() == 1);
  const auto many = bv::dyadic_scan(p, 10000, 100000);
  REQUIRE(many.size() == 4);
  CHECK(many[3].params.x == 80000);
  CHECK_THROWS_AS(bv::dyadic_scan(p, 10, 1000), ArgumentError);
  CHECK_THROWS_AS(bv::dyadic_scan(p, 1000, 100), ArgumentError);
}
