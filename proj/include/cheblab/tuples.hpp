#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cheblab/exec.hpp"
#include "cheblab/galois.hpp"

namespace cheblab::tuples {

// Offsets 0 = h_1 < h_2 < ... < h_k whose forms n + h_i have no fixed prime
// divisor. witness[j] = (p, r): residue r mod p is missed, for every prime p <= k.
struct AdmissibleTuple {
  std::vector<std::uint64_t> offsets;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> witness;

  std::size_t k() const { return offsets.size(); }
  std::uint64_t span() const { return offsets.back(); }

  // Sorts, translates so that h_1 = 0 and checks admissibility. ArgumentError
  // on empty or duplicated offsets, DomainError if not admissible.
  static AdmissibleTuple make(std::vector<std::uint64_t> offsets);
  // "0,2,6"
  static AdmissibleTuple parse(std::string_view text);
};

struct Admissibility {
  bool admissible = true;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> witness;  // (p, missed residue)
  std::optional<std::uint64_t> covering_prime;
};

// Only primes p <= k can be covered by k residues.
Admissibility is_admissible(std::span<const std::uint64_t> offsets);

enum class GenMethod { ShiftedPrimes, Greedy };

AdmissibleTuple gen_admissible(std::size_t k, GenMethod method);

// Truncated Hardy-Littlewood product prod_{p <= P} (1 - nu_p/p)(1 - 1/p)^-k,
// 0 when some nu_p = p. ArgumentError when P < k.
double singular_series(std::span<const std::uint64_t> offsets, std::uint64_t prime_cutoff);

// max(2, ceil(log k))
unsigned default_threshold(std::size_t k);

struct ClusterReport {
  std::string source;  // what membership means, e.g. "quadratic:5/split"
  std::vector<std::uint64_t> offsets;
  std::uint64_t x = 0;
  std::uint64_t h = 0;
  unsigned threshold = 1;
  std::vector<std::pair<std::uint64_t, unsigned>> matches;  // (n, count), count >= threshold, ascending n
  std::vector<std::uint64_t> histogram;                     // histogram[c] = #{n : count = c}
};

// Counts, for n in (x, x + h] with n = a (mod q), how many n + offsets[i] are
// members. member[j] describes the integer x + 1 + j and must cover
// (x, x + h + offsets.back()].
ClusterReport count_clusters(std::span<const unsigned char> member, std::span<const std::uint64_t> offsets,
                             std::uint64_t x, std::uint64_t h, unsigned threshold, std::uint64_t q = 1,
                             std::uint64_t a = 0, const Exec& exec = {});

// Membership: n + h_i prime, unramified, with Frobenius class C. Primes only.
ClusterReport scan_clusters(const galois::GaloisContext& ctx, galois::ClassId cls, const AdmissibleTuple& tuple,
                            std::uint64_t x, std::uint64_t h, unsigned threshold, const Exec& exec = {});

// Prime-set indicator over (x, x + len]: prime, unramified, Frobenius = cls.
std::vector<unsigned char> chebotarev_members(const galois::GaloisContext& ctx, galois::ClassId cls,
                                              std::uint64_t x, std::uint64_t len, const Exec& exec = {});

struct HypothesisConfig {
  galois::GaloisContext ctx;
  galois::ClassId cls;
  AdmissibleTuple tuple;
  std::uint64_t x = 0;
  std::uint64_t h = 0;  // the set A is the integers in (x, x + h]
  double theta = 0.0;
  std::optional<std::uint64_t> B;  // default |d_L|
};

struct FormTerm {
  std::uint64_t offset;
  std::uint64_t prime_count;  // #P_{L,A}(x)
  double lhs;
  double scale;      // #P_{L,A}(x) / (log x)^(100 k^2)
  double log_scale;  // natural log of scale (scale itself underflows quickly)
};

struct HypothesisReport {
  std::uint64_t window_size;  // #A(x)
  std::uint64_t q_max;        // floor(x^theta)
  std::uint64_t B;
  double term_i;
  double scale_A;
  double log_scale_A;
  std::vector<FormTerm> term_ii;
  double term_iii;
};

std::uint64_t hypothesis_q_max(std::uint64_t x, double theta);

// sum_{q <= q_max} max_a |#A(x; q, a) - #A(x)/q| for A = (x, x + h], two ways.
double hypothesis_term_i_streaming(std::uint64_t x, std::uint64_t h, std::uint64_t q_max);
double hypothesis_term_i_direct(std::uint64_t x, std::uint64_t h, std::uint64_t q_max);

// phi(h q) / phi(h) for the form n + h; phi(q) for h = 0.
double phi_L(std::uint64_t offset, std::uint64_t q);

HypothesisReport verify_hypothesis(const HypothesisConfig& cfg, const Exec& exec = {});

}  // namespace cheblab::tuples
