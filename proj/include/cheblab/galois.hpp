#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

// Concrete Galois extensions L/Q with computable Artin symbols.
//
// Supported context specs (exact grammar):
//   trivial | quadratic:<d> | cyclotomic:<m> | cubic-s3:<a>,<b>
//
// For each conjugacy class C the context records |C| and n_E = [E:Q], where
// E is the fixed field of the largest abelian subgroup of G meeting C; n_E
// bounds the admissible (delta, theta) range of the short-interval average.
namespace cheblab::galois {

struct ClassId {
  std::uint32_t index = 0;
  friend auto operator<=>(const ClassId&, const ClassId&) = default;
};

struct ClassInfo {
  std::string id;
  std::uint64_t size;
  std::uint64_t n_E;
};

// Exact non-negative rational, always reduced.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational make(std::int64_t num, std::int64_t den);
  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  friend Rational operator+(const Rational& a, const Rational& b);
  friend bool operator==(const Rational&, const Rational&) = default;
};

enum class Family { Trivial, Quadratic, Cyclotomic, CubicS3 };

class GaloisContext {
 public:
  // Parses and validates a context spec; throws SpecError.
  static GaloisContext make(std::string_view spec);

  const std::string& label() const { return label_; }
  Family family() const { return family_; }
  std::uint64_t group_order() const { return group_order_; }
  std::span<const ClassInfo> classes() const { return classes_; }
  const ClassInfo& info(ClassId c) const;
  // Looks a class up by its token ("split", "transposition", "7", ...).
  ClassId class_by_id(std::string_view id) const;
  ClassId identity_class() const { return identity_; }

  std::span<const std::uint64_t> ramified_primes() const { return ramified_; }
  bool is_ramified(std::uint64_t p) const;
  // (q, d_L) = 1, tested against the stored ramified set.
  bool coprime_to_disc(std::uint64_t q) const;
  // |d_L| when it fits in 64 bits. For cubic-s3 this is |-4a^3 - 27b^2|.
  std::optional<std::uint64_t> abs_disc() const { return abs_disc_; }

  // Artin symbol of the prime p; nullopt when p is ramified. Throws
  // ArgumentError for composite p.
  std::optional<ClassId> frobenius(std::uint64_t p) const;
  // As frobenius() but trusts the caller that p is prime (sieve output).
  std::optional<ClassId> frobenius_of_prime(std::uint64_t p) const;

  // Class of g^m for g in c.
  ClassId class_power(ClassId c, std::uint64_t m) const;
  Rational class_density(ClassId c) const;

  // Family parameters, for reporting and the test oracles.
  std::int64_t quadratic_disc() const { return quad_d_; }
  std::uint64_t cyclotomic_modulus() const { return cyclo_m_; }
  std::pair<std::int64_t, std::int64_t> cubic_coefficients() const { return {cubic_a_, cubic_b_}; }

 private:
  GaloisContext() = default;

  std::string label_;
  Family family_ = Family::Trivial;
  std::uint64_t group_order_ = 1;
  std::vector<ClassInfo> classes_;
  std::vector<std::uint64_t> ramified_;
  std::optional<std::uint64_t> abs_disc_;
  ClassId identity_{};

  std::int64_t quad_d_ = 0;
  std::uint64_t cyclo_m_ = 0;
  std::vector<std::int32_t> residue_class_;  // residue mod m -> class index, -1 for non-units
  std::vector<std::uint64_t> class_residue_;
  std::int64_t cubic_a_ = 0;
  std::int64_t cubic_b_ = 0;
};

inline GaloisContext make_context(std::string_view spec) { return GaloisContext::make(spec); }

// Number of distinct roots of x^3 + a x + b over F_p.
unsigned cubic_root_count(std::int64_t a, std::int64_t b, std::uint64_t p);

}  // namespace cheblab::galois
