#include "cheblab/modforms.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <limits>

#include <omp.h>

#include "cheblab/errors.hpp"

namespace cheblab::modforms {

namespace {

template <class Int>
Int parse_number(std::string_view tok, std::string_view spec) {
  Int v{};
  const char* first = tok.data();
  if (!tok.empty() && tok.front() == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size() || first == tok.data() + tok.size()) {
    throw SpecError("bad number '" + std::string(tok) + "' in '" + std::string(spec) + "'");
  }
  return v;
}

// (exponent, sign) pairs of prod_{n >= 1} (1 - q^(d n)) up to q^limit:
// sum over k in Z of (-1)^k q^(d k (3k - 1) / 2).
std::vector<std::pair<std::size_t, int>> pentagonal_terms(std::uint64_t d, std::size_t limit) {
  std::vector<std::pair<std::size_t, int>> terms{{0, 1}};
  for (std::uint64_t k = 1;; ++k) {
    const std::uint64_t e1 = d * (k * (3 * k - 1) / 2);
    const std::uint64_t e2 = d * (k * (3 * k + 1) / 2);
    if (e1 > limit) break;
    const int sign = (k % 2 == 0) ? 1 : -1;
    terms.emplace_back(e1, sign);
    if (e2 <= limit) terms.emplace_back(e2, sign);
  }
  return terms;
}

}  // namespace

std::vector<EtaFactor> parse_eta_spec(std::string_view spec) {
  constexpr std::string_view kPrefix = "eta:";
  if (spec.substr(0, kPrefix.size()) != kPrefix) throw SpecError("eta spec must start with 'eta:'");
  std::string_view rest = spec.substr(kPrefix.size());
  std::vector<EtaFactor> out;
  while (!rest.empty()) {
    if (rest.front() != '(') throw SpecError("expected '(' in eta spec '" + std::string(spec) + "'");
    const auto close = rest.find(')');
    const auto caret = rest.find('^');
    if (close == std::string_view::npos || caret == std::string_view::npos || caret > close) {
      throw SpecError("expected (d^r) in eta spec '" + std::string(spec) + "'");
    }
    const auto d = parse_number<std::uint64_t>(rest.substr(1, caret - 1), spec);
    const auto r = parse_number<std::int64_t>(rest.substr(caret + 1, close - caret - 1), spec);
    if (d == 0) throw SpecError("eta factor d must be >= 1");
    out.push_back({d, r});
    rest.remove_prefix(close + 1);
  }
  return out;
}

std::string eta_label(std::span<const EtaFactor> factors) {
  std::string s = "eta:";
  for (const auto& f : factors) s += "(" + std::to_string(f.d) + "^" + std::to_string(f.r) + ")";
  return s;
}

QExpansion eta_product(std::span<const EtaFactor> factors, std::size_t N) {
  std::int64_t weight_sum = 0;
  for (const auto& f : factors) {
    if (f.d == 0) throw SpecError("eta factor d must be >= 1");
    weight_sum += static_cast<std::int64_t>(f.d) * f.r;
  }
  if (weight_sum % 24 != 0) {
    throw SpecError("sum of d*r = " + std::to_string(weight_sum) + " is not divisible by 24");
  }
  if (weight_sum < 0) throw SpecError("negative q-power prefactor; series is not a(0..N)");
  const auto shift = static_cast<std::size_t>(weight_sum / 24);

  QExpansion out;
  out.provenance = eta_label(factors);
  out.coeffs.assign(N + 1, 0);
  if (shift > N) return out;
  const std::size_t M = N - shift;

  std::vector<mpz_class> f(M + 1, 0);
  f[0] = 1;
  for (const auto& factor : factors) {
    const auto terms = pentagonal_terms(factor.d, M);
    const std::uint64_t reps = static_cast<std::uint64_t>(factor.r < 0 ? -factor.r : factor.r);
    for (std::uint64_t rep = 0; rep < reps; ++rep) {
      if (factor.r > 0) {
        // f <- f * S, descending so f[n - e] is still the old value.
        for (std::size_t n = M + 1; n-- > 0;) {
          for (std::size_t t = 1; t < terms.size() && terms[t].first <= n; ++t) {
            if (terms[t].second > 0) {
              f[n] += f[n - terms[t].first];
            } else {
              f[n] -= f[n - terms[t].first];
            }
          }
        }
      } else {
        // f <- f / S, ascending: g[n] = f[n] - sum_{e > 0} s_e g[n - e].
        for (std::size_t n = 0; n <= M; ++n) {
          for (std::size_t t = 1; t < terms.size() && terms[t].first <= n; ++t) {
            if (terms[t].second > 0) {
              f[n] -= f[n - terms[t].first];
            } else {
              f[n] += f[n - terms[t].first];
            }
          }
        }
      }
    }
  }
  for (std::size_t n = 0; n <= M; ++n) out.coeffs[n + shift] = std::move(f[n]);
  return out;
}

TernaryForm TernaryForm::make(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  if (a == 0 || b == 0 || c == 0) throw SpecError("ternary form coefficients must be positive");
  std::array<std::uint64_t, 3> v{a, b, c};
  std::sort(v.begin(), v.end());
  return {v[0], v[1], v[2]};
}

TernaryForm TernaryForm::parse(std::string_view spec) {
  constexpr std::string_view kPrefix = "theta:";
  if (spec.substr(0, kPrefix.size()) != kPrefix) throw SpecError("theta spec must start with 'theta:'");
  std::string_view rest = spec.substr(kPrefix.size());
  std::array<std::uint64_t, 3> v{};
  for (int i = 0; i < 3; ++i) {
    const auto comma = rest.find(',');
    if ((i < 2) == (comma == std::string_view::npos)) throw SpecError("theta spec needs exactly a,b,c");
    v[static_cast<std::size_t>(i)] = parse_number<std::uint64_t>(rest.substr(0, comma), spec);
    if (comma != std::string_view::npos) rest.remove_prefix(comma + 1);
  }
  return make(v[0], v[1], v[2]);
}

std::string TernaryForm::label() const {
  return "theta:" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c);
}

QExpansion theta_ternary(const TernaryForm& form, std::size_t N, const Exec& exec) {
  const auto X = static_cast<std::int64_t>(arith::isqrt(N / form.a));
  const int workers = exec.resolved_workers();
  std::vector<std::vector<std::uint64_t>> partial(static_cast<std::size_t>(workers));

#pragma omp parallel num_threads(workers)
  {
    auto& counts = partial[static_cast<std::size_t>(omp_get_thread_num())];
    counts.assign(N + 1, 0);
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t x = -X; x <= X; ++x) {
      const std::uint64_t ax = form.a * static_cast<std::uint64_t>(x * x);
      const std::uint64_t rem_x = N - ax;
      const auto Y = static_cast<std::int64_t>(arith::isqrt(rem_x / form.b));
      for (std::int64_t y = -Y; y <= Y; ++y) {
        const std::uint64_t axy = ax + form.b * static_cast<std::uint64_t>(y * y);
        const auto Z = static_cast<std::int64_t>(arith::isqrt((N - axy) / form.c));
        ++counts[axy];
        for (std::int64_t z = 1; z <= Z; ++z) counts[axy + form.c * static_cast<std::uint64_t>(z * z)] += 2;
      }
    }
  }

  QExpansion out;
  out.provenance = form.label();
  out.coeffs.assign(N + 1, 0);
  std::vector<std::uint64_t> total(N + 1, 0);
  for (const auto& counts : partial) {
    if (counts.empty()) continue;  // thread never started
    for (std::size_t n = 0; n <= N; ++n) total[n] += counts[n];
  }
  for (std::size_t n = 0; n <= N; ++n) out.coeffs[n] = static_cast<unsigned long>(total[n]);
  return out;
}

std::uint64_t theta_count(const TernaryForm& form, std::uint64_t n) {
  std::uint64_t count = 0;
  const auto X = static_cast<std::int64_t>(arith::isqrt(n / form.a));
  for (std::int64_t x = -X; x <= X; ++x) {
    const std::uint64_t rx = n - form.a * static_cast<std::uint64_t>(x * x);
    const auto Y = static_cast<std::int64_t>(arith::isqrt(rx / form.b));
    for (std::int64_t y = -Y; y <= Y; ++y) {
      const std::uint64_t rxy = rx - form.b * static_cast<std::uint64_t>(y * y);
      if (rxy % form.c != 0) continue;
      const std::uint64_t zz = rxy / form.c;
      const std::uint64_t z = arith::isqrt(zz);
      if (z * z == zz) count += (z == 0) ? 1 : 2;
    }
  }
  return count;
}

QExpansion expansion_from_spec(std::string_view spec, std::size_t N, const Exec& exec) {
  if (spec.substr(0, 4) == "eta:") return eta_product(parse_eta_spec(spec), N);
  if (spec.substr(0, 6) == "theta:") return theta_ternary(TernaryForm::parse(spec), N, exec);
  throw SpecError("unknown form spec '" + std::string(spec) + "'; expected eta:(d^r)... or theta:a,b,c");
}

GapStats gap_stats(const QExpansion& f, std::uint64_t n_max) {
  const std::size_t N = f.N();
  if (std::all_of(f.coeffs.begin() + 1, f.coeffs.end(), [](const mpz_class& c) { return c == 0; })) {
    throw DomainError("series vanishes identically on 1..N; I_f is undefined");
  }
  if (n_max > N) throw RangeError("n_max exceeds the truncation N = " + std::to_string(N));

  // run[n] = number of consecutive zero coefficients starting at n
  std::vector<std::uint64_t> run(N + 2, 0);
  for (std::size_t n = N + 1; n-- > 1;) run[n] = (f[n] == 0) ? run[n + 1] + 1 : 0;

  GapStats stats;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    if (run[n] == 0) continue;
    if (n + run[n] - 1 == N) {
      throw RangeError("zero run starting at n = " + std::to_string(n) + " reaches the truncation N = " +
                       std::to_string(N));
    }
    const std::uint64_t gap = run[n] - 1;
    if (gap > stats.max_gap) {
      stats.max_gap = gap;
      stats.records.emplace_back(n, gap);
    }
  }
  return stats;
}

tuples::ClusterReport nonvanishing_clusters(const QExpansion& f, const tuples::AdmissibleTuple& tuple,
                                            std::uint64_t x, std::uint64_t h, unsigned threshold,
                                            const Exec& exec) {
  if (h == 0) throw ArgumentError("window length h must be >= 1");
  if (x + h + tuple.span() > f.N()) {
    throw RangeError("window (x, x + h + h_k] exceeds the truncation N = " + std::to_string(f.N()));
  }
  std::vector<unsigned char> member(h + tuple.span());
  for (std::size_t j = 0; j < member.size(); ++j) member[j] = f[x + 1 + j] != 0;
  auto report = tuples::count_clusters(member, tuple.offsets, x, h, threshold, 1, 0, exec);
  report.source = f.provenance + "/nonzero";
  return report;
}

bool ProxyRule::in_domain(std::int64_t d) const {
  return d > 0 && d % 2 == 1 && arith::is_squarefree(static_cast<std::uint64_t>(d));
}

ProxyRule congruent_number_rule() {
  return {"tunnell-congruent", TernaryForm::make(1, 2, 8), TernaryForm::make(1, 2, 32), 2, 32};
}

bool twist_nonvanishing_proxy(const ProxyRule& rule, std::int64_t d) {
  if (!rule.in_domain(d)) throw DomainError("d = " + std::to_string(d) + " is outside the domain of " + rule.name);
  const auto n = static_cast<std::uint64_t>(d);
  return rule.verdict(theta_count(rule.first, n), theta_count(rule.second, n));
}

DiscReport discriminant_clusters(const ProxyRule& rule, const tuples::AdmissibleTuple& tuple, std::uint64_t a,
                                 std::uint64_t q, std::uint64_t x, std::uint64_t h, unsigned threshold,
                                 bool coprime_filter, const Exec& exec) {
  if (q == 0) throw ArgumentError("progression modulus q must be >= 1");
  if (h == 0) throw ArgumentError("window length h must be >= 1");
  const std::uint64_t span = q * tuple.span();
  const std::uint64_t len = h + span;
  if (x + len > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
    throw RangeError("discriminant window overflows");
  }

  const auto first = theta_ternary(rule.first, x + len, exec);
  const auto second = theta_ternary(rule.second, x + len, exec);
  const std::uint64_t four_n = 4 * rule.level;

  DiscReport rep;
  rep.q = q;
  rep.a = a % q;
  rep.coprime_filter = coprime_filter;
  std::vector<unsigned char> member(len, 0);
  for (std::uint64_t j = 0; j < len; ++j) {
    const std::uint64_t d = x + 1 + j;
    const auto sd = static_cast<std::int64_t>(d);
    if (!is_fundamental_discriminant(sd) || !rule.in_domain(sd)) continue;
    if (coprime_filter && arith::gcd(d, four_n) != 1) continue;
    const bool positive = rule.verdict(first[d].get_ui(), second[d].get_ui());
    member[j] = positive;
    if (j < h) {
      ++rep.candidates;
      rep.proxy_positive += positive;
    }
  }
  rep.proxy_density =
      rep.candidates == 0 ? 0.0 : static_cast<double>(rep.proxy_positive) / static_cast<double>(rep.candidates);

  std::vector<std::uint64_t> scaled;
  for (const std::uint64_t off : tuple.offsets) scaled.push_back(q * off);
  rep.clusters = tuples::count_clusters(member, scaled, x, h, threshold, q, a, exec);
  rep.clusters.source = rule.name + "/proxy-nonvanishing";
  return rep;
}

}  // namespace cheblab::modforms
