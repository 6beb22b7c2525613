#include "cheblab/ellcurves.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <exception>
#include <limits>

#include "cheblab/arith.hpp"
#include "cheblab/errors.hpp"
#include "cheblab/sieve.hpp"

namespace cheblab::ell {

EllipticCurve EllipticCurve::make(std::int64_t A, std::int64_t B) {
  const __int128 inner = 4 * static_cast<__int128>(A) * A * A + 27 * static_cast<__int128>(B) * B;
  const __int128 disc = -16 * inner;
  if (disc == 0) throw SpecError("singular curve: 4A^3 + 27B^2 = 0");
  if (disc >= static_cast<__int128>(std::numeric_limits<std::int64_t>::max()) ||
      disc <= static_cast<__int128>(std::numeric_limits<std::int64_t>::min())) {
    throw SpecError("curve discriminant does not fit in 64 bits");
  }
  EllipticCurve E;
  E.A_ = A;
  E.B_ = B;
  E.disc_ = static_cast<std::int64_t>(disc);
  E.bad_ = arith::prime_divisors(static_cast<std::uint64_t>(std::llabs(E.disc_)));
  return E;
}

EllipticCurve EllipticCurve::parse(std::string_view spec) {
  if (spec.substr(0, 3) != "ec:") throw SpecError("curve spec must look like ec:A,B");
  const std::string_view rest = spec.substr(3);
  const auto comma = rest.find(',');
  if (comma == std::string_view::npos) throw SpecError("curve spec must look like ec:A,B");
  auto num = [&](std::string_view tok) {
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || tok.empty()) {
      throw SpecError("bad coefficient '" + std::string(tok) + "' in '" + std::string(spec) + "'");
    }
    return v;
  };
  return make(num(rest.substr(0, comma)), num(rest.substr(comma + 1)));
}

bool EllipticCurve::has_bad_reduction(std::uint64_t p) const {
  return std::find(bad_.begin(), bad_.end(), p) != bad_.end();
}

std::string EllipticCurve::label() const { return "ec:" + std::to_string(A_) + "," + std::to_string(B_); }

namespace {

std::int64_t character_sum_trace(const EllipticCurve& E, std::uint64_t p) {
  std::vector<unsigned char> square(p, 0);
  for (std::uint64_t t = 0; t < p; ++t) square[t * t % p] = 1;
  const std::uint64_t a = arith::mod_floor(E.A(), p);
  const std::uint64_t b = arith::mod_floor(E.B(), p);
  std::int64_t sum = 0;
  for (std::uint64_t x = 0; x < p; ++x) {
    const std::uint64_t v = ((x * x % p) * x % p + a * x % p + b) % p;
    if (v != 0) sum += square[v] ? 1 : -1;
  }
  return -sum;
}

}  // namespace

std::optional<std::int64_t> ap(const EllipticCurve& E, std::uint64_t p, const ApOptions& opts) {
  if (!arith::is_prime(p)) throw ArgumentError("a_E(p) needs a prime, got " + std::to_string(p));
  if (p > opts.max_prime) {
    throw RangeError("p = " + std::to_string(p) + " exceeds the a_E(p) evaluation cap " +
                     std::to_string(opts.max_prime));
  }
  if (E.has_bad_reduction(p)) return std::nullopt;
  return character_sum_trace(E, p);
}

tuples::ClusterReport ap_mod_clusters(const EllipticCurve& E, std::uint64_t m, std::uint64_t i,
                                      const tuples::AdmissibleTuple& tuple, std::uint64_t x, std::uint64_t h,
                                      unsigned threshold, const Exec& exec, const ApOptions& opts) {
  if (m < 2) throw ArgumentError("modulus m must be >= 2");
  if (i >= m) throw ArgumentError("residue i must satisfy 0 <= i < m");
  if (h == 0) throw ArgumentError("window length h must be >= 1");
  if (h > std::numeric_limits<std::uint64_t>::max() - tuple.span()) throw RangeError("window overflows 64 bits");
  const std::uint64_t len = h + tuple.span();
  if (x + len > opts.max_prime) {
    throw RangeError("window end exceeds the a_E(p) evaluation cap " + std::to_string(opts.max_prime));
  }

  const auto primes = sieve::primes_in(sieve::Interval::make(x, len), exec);
  std::vector<unsigned char> member(len, 0);
  const auto count = static_cast<std::int64_t>(primes.size());
#pragma omp parallel for schedule(dynamic, 16) num_threads(exec.resolved_workers())
  for (std::int64_t k = 0; k < count; ++k) {
    const std::uint64_t p = primes[static_cast<std::size_t>(k)];
    if (E.has_bad_reduction(p)) continue;
    const std::int64_t a = character_sum_trace(E, p);
    if (arith::mod_floor(a, m) == i) member[p - x - 1] = 1;
  }
  auto report = tuples::count_clusters(member, tuple.offsets, x, h, threshold, 1, 0, exec);
  report.source = E.label() + "/ap=" + std::to_string(i) + "mod" + std::to_string(m);
  return report;
}

std::optional<std::uint64_t> good_residue_exists(const EllipticCurve& E, std::uint64_t m, std::uint64_t i,
                                                 std::uint64_t bound, const ApOptions& opts) {
  if (m < 2) throw ArgumentError("modulus m must be >= 2");
  if (i >= m) throw ArgumentError("residue i must satisfy 0 <= i < m");
  if (bound < 2) throw ArgumentError("bound must be >= 2");
  for (const std::uint64_t p : arith::small_primes(bound)) {
    const auto a = ap(E, p, opts);
    if (a && arith::mod_floor(*a, m) == i) return p;
  }
  return std::nullopt;
}

modforms::DiscReport rank_zero_twist_labels(const modforms::ProxyRule& rule, const tuples::AdmissibleTuple& tuple,
                                            std::uint64_t a, std::uint64_t q, std::uint64_t x, std::uint64_t h,
                                            unsigned threshold, bool coprime_filter, const Exec& exec) {
  auto rep = modforms::discriminant_clusters(rule, tuple, a, q, x, h, threshold, coprime_filter, exec);
  rep.label = "rank 0 (conditional on the proxy rule)";
  rep.clusters.source = rule.name + "/rank-0-twist";
  return rep;
}

EllipticCurve level11_curve() { return EllipticCurve::make(-13392, -1080432); }

std::vector<std::uint64_t> level11_mismatches(std::uint64_t bound) {
  const auto E = level11_curve();
  const std::vector<modforms::EtaFactor> factors{{1, 2}, {11, 2}};
  const auto f = modforms::eta_product(factors, bound);
  std::vector<std::uint64_t> out;
  for (const std::uint64_t p : arith::small_primes(bound)) {
    if (p < 5) continue;
    const auto a = ap(E, p);
    if (!a) continue;
    if (f[p] != static_cast<long>(*a)) out.push_back(p);
  }
  return out;
}

}  // namespace cheblab::ell
