#include "cheblab/tuples.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>

#include "cheblab/arith.hpp"
#include "cheblab/errors.hpp"
#include "cheblab/sieve.hpp"

namespace cheblab::tuples {

Admissibility is_admissible(std::span<const std::uint64_t> offsets) {
  if (offsets.empty()) throw ArgumentError("admissibility of an empty tuple is undefined");
  std::vector<std::uint64_t> sorted(offsets.begin(), offsets.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ArgumentError("tuple offsets must be distinct");
  }
  Admissibility out;
  for (const std::uint64_t p : arith::small_primes(offsets.size())) {
    std::vector<bool> hit(p, false);
    for (const std::uint64_t h : offsets) hit[h % p] = true;
    const auto miss = std::find(hit.begin(), hit.end(), false);
    if (miss == hit.end()) {
      out.admissible = false;
      out.covering_prime = p;
      out.witness.clear();
      return out;
    }
    out.witness.emplace_back(p, static_cast<std::uint64_t>(miss - hit.begin()));
  }
  return out;
}

AdmissibleTuple AdmissibleTuple::make(std::vector<std::uint64_t> offsets) {
  auto check = is_admissible(offsets);
  if (!check.admissible) {
    throw DomainError("tuple is not admissible: covers every residue mod " + std::to_string(*check.covering_prime));
  }
  std::sort(offsets.begin(), offsets.end());
  const std::uint64_t shift = offsets.front();
  for (auto& h : offsets) h -= shift;
  AdmissibleTuple t;
  t.offsets = std::move(offsets);
  t.witness = is_admissible(t.offsets).witness;
  return t;
}

AdmissibleTuple AdmissibleTuple::parse(std::string_view text) {
  std::vector<std::uint64_t> offsets;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view tok = text.substr(0, comma);
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || tok.empty()) {
      throw SpecError("bad tuple offset '" + std::string(tok) + "'");
    }
    offsets.push_back(v);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  if (offsets.empty()) throw SpecError("empty tuple spec");
  return make(std::move(offsets));
}

AdmissibleTuple gen_admissible(std::size_t k, GenMethod method) {
  if (k == 0) throw ArgumentError("tuple size k must be >= 1");
  std::vector<std::uint64_t> offsets;
  if (method == GenMethod::ShiftedPrimes) {
    // k consecutive primes above k; none of them can be 0 mod a prime <= k.
    std::uint64_t limit = 64 + 4 * k;
    std::vector<std::uint64_t> primes;
    while (true) {
      primes = arith::small_primes(limit);
      const auto first = std::upper_bound(primes.begin(), primes.end(), static_cast<std::uint64_t>(k));
      if (static_cast<std::size_t>(primes.end() - first) >= k) {
        offsets.assign(first, first + static_cast<std::ptrdiff_t>(k));
        break;
      }
      limit *= 2;
    }
  } else {
    offsets.push_back(0);
    for (std::uint64_t candidate = 1; offsets.size() < k; ++candidate) {
      offsets.push_back(candidate);
      if (!is_admissible(offsets).admissible) offsets.pop_back();
    }
  }
  return AdmissibleTuple::make(std::move(offsets));
}

double singular_series(std::span<const std::uint64_t> offsets, std::uint64_t prime_cutoff) {
  const std::size_t k = offsets.size();
  if (k == 0) throw ArgumentError("singular series of an empty tuple");
  if (prime_cutoff < k) throw ArgumentError("prime cutoff P must be >= k");
  long double product = 1.0L;
  for (const std::uint64_t p : arith::small_primes(prime_cutoff)) {
    std::vector<std::uint64_t> residues;
    residues.reserve(k);
    for (const std::uint64_t h : offsets) residues.push_back(h % p);
    std::sort(residues.begin(), residues.end());
    const auto nu = static_cast<std::uint64_t>(std::unique(residues.begin(), residues.end()) - residues.begin());
    if (nu == p) return 0.0;
    const long double pl = static_cast<long double>(p);
    product *= (1.0L - static_cast<long double>(nu) / pl) * std::pow(1.0L - 1.0L / pl, -static_cast<long double>(k));
  }
  return static_cast<double>(product);
}

unsigned default_threshold(std::size_t k) {
  const auto c = static_cast<unsigned>(std::ceil(std::log(static_cast<double>(k))));
  return std::max(2U, c);
}

ClusterReport count_clusters(std::span<const unsigned char> member, std::span<const std::uint64_t> offsets,
                             std::uint64_t x, std::uint64_t h, unsigned threshold, std::uint64_t q, std::uint64_t a,
                             const Exec& exec) {
  if (threshold == 0) throw ArgumentError("cluster threshold must be >= 1");
  if (q == 0) throw ArgumentError("progression modulus must be >= 1");
  if (offsets.empty()) throw ArgumentError("empty tuple");
  if (offsets.size() > 255) throw ArgumentError("tuples are limited to 255 offsets");
  if (member.size() < h + offsets.back()) throw ArgumentError("membership array does not cover the window");

  ClusterReport report;
  report.offsets.assign(offsets.begin(), offsets.end());
  report.x = x;
  report.h = h;
  report.threshold = threshold;
  report.histogram.assign(offsets.size() + 1, 0);

  std::vector<unsigned char> counts(h, 0);
  const auto len = static_cast<std::int64_t>(h);
#pragma omp parallel for schedule(static) num_threads(exec.resolved_workers())
  for (std::int64_t j = 0; j < len; ++j) {
    unsigned c = 0;
    for (const std::uint64_t off : offsets) c += member[static_cast<std::size_t>(j) + off];
    counts[static_cast<std::size_t>(j)] = static_cast<unsigned char>(c);
  }

  const std::uint64_t r = a % q;
  for (std::uint64_t j = 0; j < h; ++j) {
    const std::uint64_t n = x + 1 + j;
    if (n % q != r) continue;
    ++report.histogram[counts[j]];
    if (counts[j] >= threshold) report.matches.emplace_back(n, counts[j]);
  }
  return report;
}

std::vector<unsigned char> chebotarev_members(const galois::GaloisContext& ctx, galois::ClassId cls,
                                              std::uint64_t x, std::uint64_t len, const Exec& exec) {
  std::vector<unsigned char> member(len, 0);
  if (len == 0) return member;
  const auto primes = sieve::primes_in(sieve::Interval::make(x, len), exec);
  const auto count = static_cast<std::int64_t>(primes.size());
#pragma omp parallel for schedule(static) num_threads(exec.resolved_workers())
  for (std::int64_t i = 0; i < count; ++i) {
    const std::uint64_t p = primes[static_cast<std::size_t>(i)];
    const auto frob = ctx.frobenius_of_prime(p);
    if (frob && *frob == cls) member[p - x - 1] = 1;
  }
  return member;
}

ClusterReport scan_clusters(const galois::GaloisContext& ctx, galois::ClassId cls, const AdmissibleTuple& tuple,
                            std::uint64_t x, std::uint64_t h, unsigned threshold, const Exec& exec) {
  ctx.info(cls);
  if (h == 0) throw ArgumentError("window length h must be >= 1");
  if (h > std::numeric_limits<std::uint64_t>::max() - tuple.span()) throw RangeError("window overflows 64 bits");
  const auto member = chebotarev_members(ctx, cls, x, h + tuple.span(), exec);
  auto report = count_clusters(member, tuple.offsets, x, h, threshold, 1, 0, exec);
  report.source = ctx.label() + "/" + ctx.info(cls).id;
  return report;
}

std::uint64_t hypothesis_q_max(std::uint64_t x, double theta) {
  const long double v = std::pow(static_cast<long double>(x), static_cast<long double>(theta));
  return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::floor(v + 1e-9L)));
}

double hypothesis_term_i_streaming(std::uint64_t x, std::uint64_t h, std::uint64_t q_max) {
  std::vector<std::vector<std::uint64_t>> counts(q_max + 1);
  for (std::uint64_t q = 1; q <= q_max; ++q) counts[q].assign(q, 0);
  for (std::uint64_t n = x + 1; n <= x + h; ++n) {
    for (std::uint64_t q = 1; q <= q_max; ++q) ++counts[q][n % q];
  }
  double total = 0.0;
  for (std::uint64_t q = 1; q <= q_max; ++q) {
    const double expected = static_cast<double>(h) / static_cast<double>(q);
    double worst = 0.0;
    for (const std::uint64_t c : counts[q]) worst = std::max(worst, std::abs(static_cast<double>(c) - expected));
    total += worst;
  }
  return total;
}

double hypothesis_term_i_direct(std::uint64_t x, std::uint64_t h, std::uint64_t q_max) {
  double total = 0.0;
  for (std::uint64_t q = 1; q <= q_max; ++q) {
    const double expected = static_cast<double>(h) / static_cast<double>(q);
    double worst = 0.0;
    for (std::uint64_t a = 0; a < q; ++a) {
      // #{n <= t : n = a mod q} up to a constant that cancels in the difference
      const std::uint64_t c = (x + h + q - a) / q - (x + q - a) / q;
      worst = std::max(worst, std::abs(static_cast<double>(c) - expected));
    }
    total += worst;
  }
  return total;
}

double phi_L(std::uint64_t offset, std::uint64_t q) {
  if (offset == 0) return static_cast<double>(arith::totient(q));
  return static_cast<double>(arith::totient(offset * q)) / static_cast<double>(arith::totient(offset));
}

HypothesisReport verify_hypothesis(const HypothesisConfig& cfg, const Exec& exec) {
  if (cfg.h == 0) throw ArgumentError("empty window: h must be >= 1");
  if (cfg.theta < 0.0 || cfg.theta >= 1.0) throw ArgumentError("theta must lie in [0, 1)");
  if (cfg.x < 2) throw ArgumentError("x must be >= 2");
  const auto& offsets = cfg.tuple.offsets;
  const std::size_t k = offsets.size();

  HypothesisReport rep;
  rep.window_size = cfg.h;
  rep.q_max = hypothesis_q_max(cfg.x, cfg.theta);
  rep.B = cfg.B.value_or(cfg.ctx.abs_disc().value_or(1));
  if (rep.B == 0) throw ArgumentError("B must be >= 1");

  const double loglog = std::log(std::log(static_cast<double>(cfg.x)));
  const double damping = 100.0 * static_cast<double>(k * k) * loglog;
  rep.term_i = hypothesis_term_i_streaming(cfg.x, cfg.h, rep.q_max);
  rep.log_scale_A = std::log(static_cast<double>(cfg.h)) - damping;
  rep.scale_A = std::exp(rep.log_scale_A);

  rep.term_iii = 0.0;
  for (std::uint64_t q = 1; q <= rep.q_max; ++q) {
    for (std::uint64_t a = 0; a < q; ++a) {
      const std::uint64_t c = (cfg.x + cfg.h + q - a) / q - (cfg.x + q - a) / q;
      rep.term_iii = std::max(rep.term_iii, static_cast<double>(q) * static_cast<double>(c) / static_cast<double>(cfg.h));
    }
  }

  const auto member = chebotarev_members(cfg.ctx, cfg.cls, cfg.x, cfg.h + cfg.tuple.span(), exec);
  for (const std::uint64_t off : offsets) {
    FormTerm term{off, 0, 0.0, 0.0, 0.0};
    std::vector<std::vector<std::uint64_t>> counts(rep.q_max + 1);
    for (std::uint64_t q = 1; q <= rep.q_max; ++q) counts[q].assign(q, 0);
    for (std::uint64_t j = 0; j < cfg.h; ++j) {
      if (!member[j + off]) continue;
      ++term.prime_count;
      const std::uint64_t n = cfg.x + 1 + j;
      for (std::uint64_t q = 1; q <= rep.q_max; ++q) ++counts[q][n % q];
    }
    for (std::uint64_t q = 1; q <= rep.q_max; ++q) {
      if (arith::gcd(q, rep.B) != 1) continue;
      const double expected = static_cast<double>(term.prime_count) / phi_L(off, q);
      double worst = 0.0;
      for (std::uint64_t a = 0; a < q; ++a) {
        if (arith::gcd((a + off) % q, q) != 1) continue;
        worst = std::max(worst, std::abs(static_cast<double>(counts[q][a]) - expected));
      }
      term.lhs += worst;
    }
    term.log_scale = term.prime_count == 0 ? -std::numeric_limits<double>::infinity()
                                           : std::log(static_cast<double>(term.prime_count)) - damping;
    term.scale = std::exp(term.log_scale);
    rep.term_ii.push_back(term);
  }
  return rep;
}

}  // namespace cheblab::tuples
