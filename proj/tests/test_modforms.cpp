#include <doctest.h>

#include "cheblab/errors.hpp"
#include "cheblab/modforms.hpp"
#include "oracles/oracles.hpp"

using namespace cheblab;
using modforms::TernaryForm;
using tuples::AdmissibleTuple;

namespace {

Exec workers(int n) {
  Exec e;
  e.workers = n;
  return e;
}

}  // namespace

TEST_CASE("eta spec parsing") {
  const auto f = modforms::parse_eta_spec("eta:(1^2)(11^2)");
  REQUIRE(f.size() == 2);
  CHECK(f[1].d == 11);
  CHECK(f[1].r == 2);
  CHECK(modforms::eta_label(f) == "eta:(1^2)(11^2)");
  CHECK_THROWS_AS(modforms::expansion_from_spec("eta:(1^5)", 10), SpecError);  // weight sum not 0 mod 24
  CHECK_THROWS_AS(modforms::parse_eta_spec("(1^24)"), SpecError);
  CHECK_THROWS_AS(modforms::parse_eta_spec("eta:(0^24)"), SpecError);
  CHECK_THROWS_AS(modforms::expansion_from_spec("zeta:1", 10), SpecError);
}

TEST_CASE("empty eta product is the constant series") {
  const auto f = modforms::eta_product({}, 10);
  CHECK(f[0] == 1);
  for (std::size_t n = 1; n <= 10; ++n) CHECK(f[n] == 0);
}

TEST_CASE("Delta matches the dense-product oracle") {
  const std::vector<modforms::EtaFactor> delta{{1, 24}};
  const auto f = modforms::eta_product(delta, 1000);
  const auto tau = oracle::oracle_tau_series(1000);
  CHECK(oracle::oracle_tau(1) == 1);
  CHECK(f[2] == -24);
  CHECK(f[3] == 252);
  for (std::size_t n = 0; n <= 1000; ++n) REQUIRE(f[n] == tau[n]);
}

TEST_CASE("negative exponents invert exactly") {
  // eta(z)^24 * eta(z)^-24 * eta(2z)^24 is eta(2z)^24 = Delta(2z)
  const std::vector<modforms::EtaFactor> f{{1, 24}, {1, -24}, {2, 24}};
  const auto g = modforms::eta_product(f, 200);
  const auto tau = oracle::oracle_tau_series(100);
  for (std::size_t n = 0; n <= 200; ++n) CHECK(g[n] == (n % 2 == 0 ? tau[n / 2] : mpz_class(0)));
}

TEST_CASE("level 11 newform") {
  const auto f = modforms::expansion_from_spec("eta:(1^2)(11^2)", 20);
  const std::vector<int> want{0, 1, -2, -1, 2, 1, 2, -2, 0, -2, -2};
  for (std::size_t n = 0; n < want.size(); ++n) CHECK(f[n] == want[n]);
}

TEST_CASE("ternary theta counts") {
  CHECK(modforms::theta_count(TernaryForm::make(1, 1, 1), 0) == 1);
  CHECK(modforms::theta_count(TernaryForm::make(1, 2, 8), 1) == 2);
  CHECK(modforms::theta_count(TernaryForm::make(1, 2, 8), 3) == 4);
  CHECK(TernaryForm::parse("theta:8,1,2").label() == "theta:1,2,8");
  CHECK_THROWS_AS(TernaryForm::parse("theta:1,2"), SpecError);
  CHECK_THROWS_AS(TernaryForm::make(0, 1, 1), SpecError);
  for (const auto& [a, b, c] : {std::array<std::uint64_t, 3>{1, 2, 8}, {1, 2, 32}, {1, 1, 1}, {2, 3, 5}}) {
    const auto form = TernaryForm::make(a, b, c);
    const auto s1 = modforms::theta_ternary(form, 1000, workers(1));
    const auto s4 = modforms::theta_ternary(form, 1000, workers(4));
    for (std::uint64_t n = 0; n <= 1000; ++n) {
      REQUIRE(s1[n] == oracle::oracle_theta_count(a, b, c, n));
      REQUIRE(s4[n] == s1[n]);
      REQUIRE(modforms::theta_count(form, n) == s1[n].get_ui());
    }
  }
}

TEST_CASE("gap statistics") {
  const auto delta = modforms::expansion_from_spec("eta:(1^24)", 10000);
  const auto g = modforms::gap_stats(delta, 10000);
  CHECK(g.max_gap == 0);

  modforms::QExpansion f{{0, 1, 0, 0, 1, 0, 1, 1}, "test"};
  const auto s = modforms::gap_stats(f, 6);
  CHECK(s.max_gap == 1);
  REQUIRE(s.records.size() == 1);
  CHECK(s.records[0] == std::make_pair<std::uint64_t, std::uint64_t>(2, 1));
  CHECK_THROWS_AS(modforms::gap_stats(f, 8), RangeError);

  modforms::QExpansion tail{{1, 1, 0, 0}, "tail"};
  CHECK_THROWS_AS(modforms::gap_stats(tail, 3), RangeError);
  modforms::QExpansion zero{{1, 0, 0}, "zero"};
  CHECK_THROWS_AS(modforms::gap_stats(zero, 2), DomainError);
}

TEST_CASE("theta series of (1,2,8) has long-range zeros") {
  const auto f = modforms::expansion_from_spec("theta:1,2,8", 2000);
  const auto g = modforms::gap_stats(f, 1000);
  CHECK(g.max_gap >= 1);
  for (const auto& [n, gap] : g.records) {
    for (std::uint64_t j = 0; j <= gap; ++j) CHECK(f[n + j] == 0);
  }
}

TEST_CASE("nonvanishing clusters") {
  const auto delta = modforms::expansion_from_spec("eta:(1^24)", 400);
  const auto t = AdmissibleTuple::make({0, 2, 6});
  const auto rep = modforms::nonvanishing_clusters(delta, t, 100, 200, 3);
  CHECK(rep.matches.size() == 200);
  for (const auto& [n, c] : rep.matches) CHECK(c == 3);
  CHECK(modforms::nonvanishing_clusters(delta, t, 100, 200, 4).matches.empty());
  CHECK_THROWS_AS(modforms::nonvanishing_clusters(delta, t, 300, 200, 1), RangeError);
}

TEST_CASE("fundamental discriminants") {
  CHECK(modforms::is_fundamental_discriminant(5));
  CHECK(modforms::is_fundamental_discriminant(8));
  CHECK_FALSE(modforms::is_fundamental_discriminant(20));
}

TEST_CASE("congruent-number proxy rule") {
  const auto rule = modforms::congruent_number_rule();
  CHECK(rule.in_domain(1));
  CHECK_FALSE(rule.in_domain(2));
  CHECK_FALSE(rule.in_domain(9));
  CHECK_THROWS_AS(modforms::twist_nonvanishing_proxy(rule, 6), DomainError);
  // d = 1: both forms have exactly the points (+-1, 0, 0)
  CHECK(oracle::oracle_theta_count(1, 2, 8, 1) == 2);
  CHECK(oracle::oracle_theta_count(1, 2, 32, 1) == 2);
  CHECK(modforms::twist_nonvanishing_proxy(rule, 1));
  // d = 7: both counts vanish, so the rule reports vanishing
  CHECK(oracle::oracle_theta_count(1, 2, 8, 7) == 0);
  CHECK(oracle::oracle_theta_count(1, 2, 32, 7) == 0);
  CHECK_FALSE(modforms::twist_nonvanishing_proxy(rule, 7));
  // congruent numbers 5, 7 and non-congruent 1, 3 among small odd squarefree d
  CHECK_FALSE(modforms::twist_nonvanishing_proxy(rule, 5));
  CHECK(modforms::twist_nonvanishing_proxy(rule, 3));
}

TEST_CASE("discriminant clusters") {
  const auto rule = modforms::congruent_number_rule();
  const auto t = AdmissibleTuple::make({0, 2});
  const auto rep = modforms::discriminant_clusters(rule, t, 1, 4, 0, 2000, 1);
  CHECK(rep.candidates > 0);
  CHECK(rep.proxy_positive <= rep.candidates);
  std::uint64_t cand = 0, pos = 0;
  for (std::int64_t d = 1; d <= 2000; ++d) {
    if (!modforms::is_fundamental_discriminant(d) || !rule.in_domain(d)) continue;
    ++cand;
    pos += rule.verdict(oracle::oracle_theta_count(1, 2, 8, d), oracle::oracle_theta_count(1, 2, 32, d));
  }
  CHECK(rep.candidates == cand);
  CHECK(rep.proxy_positive == pos);
  CHECK(modforms::discriminant_clusters(rule, t, 1, 4, 0, 2000, 3).clusters.matches.empty());
}
