#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cheblab/exact_sum.hpp"
#include "cheblab/exec.hpp"
#include "cheblab/galois.hpp"
#include "cheblab/sieve.hpp"

// psi_C(x; q, a): the sum of log p over unramified prime powers p^m <= x
// whose m-th power Artin symbol is C and with p^m = a (mod q).
namespace cheblab::cheb {

using galois::ClassId;
using galois::GaloisContext;

struct ChebotarevEvent {
  std::uint64_t n;
  std::uint64_t p;
  unsigned m;
  double weight;
  ClassId cls;  // class_power(frobenius(p), m)
};

struct PsiQuery {
  ClassId cls;
  std::uint64_t x = 0;
  std::uint64_t q = 1;
  std::uint64_t a = 1;

  // q >= 1 and gcd(a, q) = 1, else ArgumentError.
  void validate() const;
};

// Drops ramified prime powers and attaches classes.
std::vector<ChebotarevEvent> classify(const GaloisContext& ctx, std::span<const sieve::LambdaEvent> events);

std::vector<ChebotarevEvent> cheb_events(const GaloisContext& ctx, sieve::Interval iv, const Exec& exec = {});

ExactSum psi_C_exact(const GaloisContext& ctx, const PsiQuery& query, const Exec& exec = {});
double psi_C(const GaloisContext& ctx, const PsiQuery& query, const Exec& exec = {});

// psi_C(N + y; q, a) - psi_C(N; q, a), from one pass over (N, N + y].
ExactSum window_psi_C_exact(const GaloisContext& ctx, ClassId cls, std::uint64_t N, std::uint64_t y,
                            std::uint64_t q, std::uint64_t a, const Exec& exec = {});
double window_psi_C(const GaloisContext& ctx, ClassId cls, std::uint64_t N, std::uint64_t y, std::uint64_t q,
                    std::uint64_t a, const Exec& exec = {});

// (|C| / |G|) * y / phi(q). DomainError unless (q, d_L) = 1: the density
// for q sharing a ramified prime has no closed form here.
double main_term(const GaloisContext& ctx, ClassId cls, double y, std::uint64_t q);

enum class Weights { PrimePowers, PrimesOnly };

// window_psi_C(x, h) / main_term(h); tends to 1 for h >= x^(1 - delta).
double cdt_ratio(const GaloisContext& ctx, ClassId cls, std::uint64_t x, std::uint64_t h, std::uint64_t q,
                 std::uint64_t a, const Exec& exec = {}, Weights weights = Weights::PrimePowers);

// All (class, q, a) sums over one window, plus the ramified remainder.
class ResidueTable {
 public:
  ResidueTable(const GaloisContext& ctx, std::vector<std::uint64_t> moduli);

  void add(const ChebotarevEvent& e);
  void add_ramified(const sieve::LambdaEvent& e) { ramified_ += ExactSum::from_weight(e.weight); }
  void merge(const ResidueTable& other);

  std::span<const std::uint64_t> moduli() const { return moduli_; }
  // Residue a is reduced mod q; q must be one of moduli().
  ExactSum at(ClassId cls, std::uint64_t q, std::uint64_t a) const;
  ExactSum ramified() const { return ramified_; }

 private:
  std::size_t slot(ClassId cls, std::uint64_t q, std::uint64_t a) const;

  std::size_t num_classes_;
  std::vector<std::uint64_t> moduli_;
  std::vector<std::size_t> offsets_;
  std::size_t stride_ = 0;
  std::vector<ExactSum> sums_;
  ExactSum ramified_;
};

ResidueTable psi_C_table(const GaloisContext& ctx, sieve::Interval iv, std::vector<std::uint64_t> moduli,
                         const Exec& exec = {});

}  // namespace cheblab::cheb
