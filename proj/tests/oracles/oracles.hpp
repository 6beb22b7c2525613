#pragma once

// Brute-force reference values for the test suite. Nothing here calls into the
// library's sieve, Frobenius, q-series or point-count code; only the context
// metadata (family and defining data) is read from GaloisContext.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "cheblab/galois.hpp"

namespace oracle {

// Every oracle throws std::out_of_range past its bound.
inline constexpr std::uint64_t kCountBound = 1'000'000;
inline constexpr std::size_t kTauBound = 1000;
inline constexpr std::uint64_t kThetaBound = 100'000;
inline constexpr std::uint64_t kApBound = 1000;

bool is_prime_trial(std::uint64_t n);

std::uint64_t oracle_prime_count(std::uint64_t x);
// Summed in increasing n.
double oracle_psi(std::uint64_t x);
double oracle_window_psi(std::uint64_t N, std::uint64_t y);
// #{n <= x : n and n + 2 both prime}
std::uint64_t oracle_twin_pairs(std::uint64_t x);

// Class id string, or nullopt when p is ramified.
std::optional<std::string> oracle_frobenius(const cheblab::galois::GaloisContext& ctx, std::uint64_t p);
// Class id of frob(p)^m.
std::optional<std::string> oracle_frobenius_power(const cheblab::galois::GaloisContext& ctx, std::uint64_t p,
                                                  std::uint64_t m);
double oracle_psi_C(const cheblab::galois::GaloisContext& ctx, const std::string& cls, std::uint64_t x,
                    std::uint64_t q = 1, std::uint64_t a = 1);
// Same, restricted to n in (N, N + y].
double oracle_window_psi_C(const cheblab::galois::GaloisContext& ctx, const std::string& cls, std::uint64_t N,
                           std::uint64_t y, std::uint64_t q = 1, std::uint64_t a = 1);

// Coefficients tau(0..n) of q * prod (1 - q^k)^24 by dense multiplication.
std::vector<mpz_class> oracle_tau_series(std::size_t n);
mpz_class oracle_tau(std::size_t n);

// #{(x, y, z) in Z^3 : a x^2 + b y^2 + c z^2 = n}
std::uint64_t oracle_theta_count(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t n);

// p + 1 - #E(F_p) by counting all (x, y); nullopt for bad reduction.
std::optional<std::int64_t> oracle_ap(std::int64_t A, std::int64_t B, std::uint64_t p);

// Truncated Euler product for the singular series of offsets over primes p <= P.
double oracle_singular_series(const std::vector<std::uint64_t>& offsets, std::uint64_t P);

// True when offsets miss some residue class modulo every prime.
bool oracle_admissible(const std::vector<std::uint64_t>& offsets);

}  // namespace oracle
