#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cheblab/exec.hpp"
#include "cheblab/modforms.hpp"
#include "cheblab/tuples.hpp"

namespace cheblab::ell {

// y^2 = x^3 + A x + B, Delta_E = -16 (4 A^3 + 27 B^2) != 0.
class EllipticCurve {
 public:
  // SpecError for singular curves or |Delta_E| >= 2^63.
  static EllipticCurve make(std::int64_t A, std::int64_t B);
  static EllipticCurve parse(std::string_view spec);  // "ec:A,B"

  std::int64_t A() const { return A_; }
  std::int64_t B() const { return B_; }
  std::int64_t discriminant() const { return disc_; }
  const std::vector<std::uint64_t>& bad_primes() const { return bad_; }
  bool has_bad_reduction(std::uint64_t p) const;
  std::string label() const;

 private:
  EllipticCurve() = default;
  std::int64_t A_ = 0;
  std::int64_t B_ = 0;
  std::int64_t disc_ = 0;
  std::vector<std::uint64_t> bad_;
};

// Character-sum evaluation is O(p); primes above max_prime are refused.
struct ApOptions {
  std::uint64_t max_prime = 10'000'000;
};

// a_E(p) = -sum_x legendre(x^3 + A x + B, p); nullopt on bad reduction.
// ArgumentError for composite p, RangeError above the cap.
std::optional<std::int64_t> ap(const EllipticCurve& E, std::uint64_t p, const ApOptions& opts = {});

// Membership: n + h_j prime of good reduction with a_E(n + h_j) = i (mod m).
tuples::ClusterReport ap_mod_clusters(const EllipticCurve& E, std::uint64_t m, std::uint64_t i,
                                      const tuples::AdmissibleTuple& tuple, std::uint64_t x, std::uint64_t h,
                                      unsigned threshold, const Exec& exec = {}, const ApOptions& opts = {});

// Smallest good prime p0 <= bound with a_E(p0) = i (mod m).
std::optional<std::uint64_t> good_residue_exists(const EllipticCurve& E, std::uint64_t m, std::uint64_t i,
                                                 std::uint64_t bound, const ApOptions& opts = {});

// Relabels the proxy-positive discriminants d as "rank 0 (conditional on the
// proxy rule)". Match sets are exactly the delegate's.
modforms::DiscReport rank_zero_twist_labels(const modforms::ProxyRule& rule, const tuples::AdmissibleTuple& tuple,
                                            std::uint64_t a, std::uint64_t q, std::uint64_t x, std::uint64_t h,
                                            unsigned threshold, bool coprime_filter = true, const Exec& exec = {});

// Short Weierstrass model of 11a1 (y^2 + y = x^3 - x^2 - 10x - 20):
// y^2 = x^3 - 13392 x - 1080432.
EllipticCurve level11_curve();

// Good primes 5 <= p <= bound where a_E(p) of level11_curve() differs from
// the coefficient a(p) of eta:(1^2)(11^2). Empty when both routes agree.
std::vector<std::uint64_t> level11_mismatches(std::uint64_t bound);

}  // namespace cheblab::ell
