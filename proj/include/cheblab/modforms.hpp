#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "cheblab/arith.hpp"
#include "cheblab/exec.hpp"
#include "cheblab/tuples.hpp"

// Exact q-expansions of the shipped modular-form models.
//
//   eta:(d1^r1)(d2^r2)...   q^(sum d r / 24) prod_i prod_n (1 - q^(d_i n))^(r_i)
//   theta:a,b,c             sum over Z^3 of q^(a x^2 + b y^2 + c z^2)
//
// Delta = eta:(1^24) and the level 11 newform eta:(1^2)(11^2) are the
// integral-weight models; ternary thetas are the half-integral-weight side
// used by the Tunnell-style central-value proxy.
namespace cheblab::modforms {

struct QExpansion {
  std::vector<mpz_class> coeffs;  // a(0..N)
  std::string provenance;

  std::size_t N() const { return coeffs.size() - 1; }
  const mpz_class& operator[](std::size_t n) const { return coeffs[n]; }
};

struct EtaFactor {
  std::uint64_t d;
  std::int64_t r;
};

// "eta:(1^2)(11^2)"; "eta:" is the empty product.
std::vector<EtaFactor> parse_eta_spec(std::string_view spec);
std::string eta_label(std::span<const EtaFactor> factors);

// Sparse multiplication (r > 0) or division (r < 0) by the pentagonal
// expansion of each prod (1 - q^(d n)). SpecError unless sum d r = 0 mod 24
// and the prefactor exponent is non-negative.
QExpansion eta_product(std::span<const EtaFactor> factors, std::size_t N);

struct TernaryForm {
  std::uint64_t a;
  std::uint64_t b;
  std::uint64_t c;

  // Sorts into a <= b <= c; SpecError on zero coefficients.
  static TernaryForm make(std::uint64_t a, std::uint64_t b, std::uint64_t c);
  static TernaryForm parse(std::string_view spec);  // "theta:1,2,8"
  std::string label() const;
};

QExpansion theta_ternary(const TernaryForm& form, std::size_t N, const Exec& exec = {});

// #{(x, y, z) : a x^2 + b y^2 + c z^2 = n} for a single n.
std::uint64_t theta_count(const TernaryForm& form, std::uint64_t n);

// Dispatches on the "eta:" / "theta:" prefix.
QExpansion expansion_from_spec(std::string_view spec, std::size_t N, const Exec& exec = {});

// I_f(n) = max{ i : a(n + j) = 0 for 0 <= j <= i }, taken as 0 when a(n) != 0.
struct GapStats {
  std::uint64_t max_gap = 0;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> records;  // (n, I_f(n)) where the running max grows
};

// Scans n = 1..n_max. DomainError for an all-zero series, RangeError when a
// zero run starting at or before n_max reaches the truncation point.
GapStats gap_stats(const QExpansion& f, std::uint64_t n_max);

// Membership: a_f(n + h_i) != 0. RangeError unless x + h + span <= N.
tuples::ClusterReport nonvanishing_clusters(const QExpansion& f, const tuples::AdmissibleTuple& tuple,
                                            std::uint64_t x, std::uint64_t h, unsigned threshold,
                                            const Exec& exec = {});

inline bool is_fundamental_discriminant(std::int64_t d) { return arith::is_fundamental_discriminant(d); }

// A coefficient-comparison stand-in for L(1/2, f_d) != 0. This is a proxy
// label only; no analytic L-value is ever computed.
struct ProxyRule {
  std::string name;
  TernaryForm first;
  TernaryForm second;
  std::int64_t factor = 2;   // nonvanishing iff r_first(d) != factor * r_second(d)
  std::uint64_t level = 32;  // conductor N of the twisted family, for the (d, 4N) = 1 filter

  // Odd, squarefree, positive.
  bool in_domain(std::int64_t d) const;
  bool verdict(std::uint64_t count_first, std::uint64_t count_second) const {
    return static_cast<std::int64_t>(count_first) != factor * static_cast<std::int64_t>(count_second);
  }
};

// Tunnell's criterion for the congruent number curve y^2 = x^3 - x (odd d):
// forms x^2 + 2y^2 + 8z^2 and x^2 + 2y^2 + 32z^2, factor 2, N = 32.
ProxyRule congruent_number_rule();

// DomainError when d is outside rule.in_domain.
bool twist_nonvanishing_proxy(const ProxyRule& rule, std::int64_t d);

struct DiscReport {
  tuples::ClusterReport clusters;
  std::uint64_t q = 1;
  std::uint64_t a = 0;
  bool coprime_filter = true;
  std::uint64_t candidates = 0;      // fundamental, in domain, filtered d in (x, x + h]
  std::uint64_t proxy_positive = 0;  // of those, proxy says nonvanishing
  double proxy_density = 0.0;        // observed statistic only
  std::string label = "proxy-nonvanishing";
};

// n in (x, x + h] with n = a (mod q); member d = n + q h_i must be a
// fundamental discriminant in the rule's domain, pass the (d, 4N) = 1 filter
// when enabled, and get a nonvanishing proxy verdict.
DiscReport discriminant_clusters(const ProxyRule& rule, const tuples::AdmissibleTuple& tuple, std::uint64_t a,
                                 std::uint64_t q, std::uint64_t x, std::uint64_t h, unsigned threshold,
                                 bool coprime_filter = true, const Exec& exec = {});

}  // namespace cheblab::modforms
