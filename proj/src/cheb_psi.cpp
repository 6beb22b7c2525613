#include "cheblab/cheb_psi.hpp"

#include <algorithm>
#include <string>

#include "cheblab/arith.hpp"
#include "cheblab/errors.hpp"

namespace cheblab::cheb {

void PsiQuery::validate() const {
  if (q == 0) throw ArgumentError("modulus q must be >= 1");
  if (arith::gcd(a % q, q) != 1) {
    throw ArgumentError("residue a = " + std::to_string(a) + " is not coprime to q = " + std::to_string(q));
  }
}

std::vector<ChebotarevEvent> classify(const GaloisContext& ctx, std::span<const sieve::LambdaEvent> events) {
  std::vector<ChebotarevEvent> out;
  out.reserve(events.size());
  for (const auto& e : events) {
    const auto frob = ctx.frobenius_of_prime(e.p);
    if (!frob) continue;
    const ClassId cls = e.m == 1 ? *frob : ctx.class_power(*frob, e.m);
    out.push_back({e.n, e.p, e.m, e.weight, cls});
  }
  return out;
}

std::vector<ChebotarevEvent> cheb_events(const GaloisContext& ctx, sieve::Interval iv, const Exec& exec) {
  std::vector<ChebotarevEvent> out;
  sieve::for_each_segment(
      iv, [&](std::span<const sieve::LambdaEvent> events) { return classify(ctx, events); },
      [&](const std::vector<ChebotarevEvent>& evs) { out.insert(out.end(), evs.begin(), evs.end()); }, exec);
  return out;
}

ExactSum window_psi_C_exact(const GaloisContext& ctx, ClassId cls, std::uint64_t N, std::uint64_t y,
                            std::uint64_t q, std::uint64_t a, const Exec& exec) {
  PsiQuery{cls, N + y, q, a}.validate();
  ctx.info(cls);
  ExactSum total;
  if (y == 0) return total;
  const std::uint64_t r = a % q;
  sieve::for_each_segment(
      sieve::Interval::make(N, y),
      [&](std::span<const sieve::LambdaEvent> events) {
        ExactSum s;
        for (const auto& e : events) {
          if (e.n % q != r) continue;
          const auto frob = ctx.frobenius_of_prime(e.p);
          if (!frob) continue;
          if ((e.m == 1 ? *frob : ctx.class_power(*frob, e.m)) == cls) s += ExactSum::from_weight(e.weight);
        }
        return s;
      },
      [&](const ExactSum& s) { total += s; }, exec);
  return total;
}

double window_psi_C(const GaloisContext& ctx, ClassId cls, std::uint64_t N, std::uint64_t y, std::uint64_t q,
                    std::uint64_t a, const Exec& exec) {
  return window_psi_C_exact(ctx, cls, N, y, q, a, exec).value();
}

ExactSum psi_C_exact(const GaloisContext& ctx, const PsiQuery& query, const Exec& exec) {
  return window_psi_C_exact(ctx, query.cls, 0, query.x, query.q, query.a, exec);
}

double psi_C(const GaloisContext& ctx, const PsiQuery& query, const Exec& exec) {
  return psi_C_exact(ctx, query, exec).value();
}

double main_term(const GaloisContext& ctx, ClassId cls, double y, std::uint64_t q) {
  if (q == 0) throw ArgumentError("modulus q must be >= 1");
  if (!ctx.coprime_to_disc(q)) {
    throw DomainError("q = " + std::to_string(q) + " shares a ramified prime with d_L of " + ctx.label());
  }
  const auto& c = ctx.info(cls);
  return static_cast<double>(c.size) * y /
         (static_cast<double>(ctx.group_order()) * static_cast<double>(arith::totient(q)));
}

double cdt_ratio(const GaloisContext& ctx, ClassId cls, std::uint64_t x, std::uint64_t h, std::uint64_t q,
                 std::uint64_t a, const Exec& exec, Weights weights) {
  const double expected = main_term(ctx, cls, static_cast<double>(h), q);
  if (expected == 0.0) throw DomainError("main term is zero; ratio undefined");
  if (weights == Weights::PrimePowers) return window_psi_C(ctx, cls, x, h, q, a, exec) / expected;

  PsiQuery{cls, x + h, q, a}.validate();
  const std::uint64_t r = a % q;
  ExactSum total;
  sieve::for_each_segment(
      sieve::Interval::make(x, h),
      [&](std::span<const sieve::LambdaEvent> events) {
        ExactSum s;
        for (const auto& e : events) {
          if (e.m != 1 || e.n % q != r) continue;
          const auto frob = ctx.frobenius_of_prime(e.p);
          if (frob && *frob == cls) s += ExactSum::from_weight(e.weight);
        }
        return s;
      },
      [&](const ExactSum& s) { total += s; }, exec);
  return total.value() / expected;
}

ResidueTable::ResidueTable(const GaloisContext& ctx, std::vector<std::uint64_t> moduli)
    : num_classes_(ctx.classes().size()), moduli_(std::move(moduli)) {
  for (const std::uint64_t q : moduli_) {
    if (q == 0) throw ArgumentError("modulus q must be >= 1");
    offsets_.push_back(stride_);
    stride_ += q;
  }
  sums_.assign(num_classes_ * stride_, ExactSum{});
}

void ResidueTable::add(const ChebotarevEvent& e) {
  const ExactSum w = ExactSum::from_weight(e.weight);
  const std::size_t base = static_cast<std::size_t>(e.cls.index) * stride_;
  for (std::size_t j = 0; j < moduli_.size(); ++j) sums_[base + offsets_[j] + e.n % moduli_[j]] += w;
}

void ResidueTable::merge(const ResidueTable& other) {
  for (std::size_t i = 0; i < sums_.size(); ++i) sums_[i] += other.sums_[i];
  ramified_ += other.ramified_;
}

std::size_t ResidueTable::slot(ClassId cls, std::uint64_t q, std::uint64_t a) const {
  const auto it = std::find(moduli_.begin(), moduli_.end(), q);
  if (it == moduli_.end()) throw ArgumentError("modulus " + std::to_string(q) + " not in residue table");
  if (cls.index >= num_classes_) throw ArgumentError("unknown class index");
  return static_cast<std::size_t>(cls.index) * stride_ + offsets_[static_cast<std::size_t>(it - moduli_.begin())] +
         a % q;
}

ExactSum ResidueTable::at(ClassId cls, std::uint64_t q, std::uint64_t a) const { return sums_[slot(cls, q, a)]; }

ResidueTable psi_C_table(const GaloisContext& ctx, sieve::Interval iv, std::vector<std::uint64_t> moduli,
                         const Exec& exec) {
  ResidueTable table(ctx, moduli);
  sieve::for_each_segment(
      iv,
      [&](std::span<const sieve::LambdaEvent> events) {
        ResidueTable part(ctx, moduli);
        for (const auto& e : events) {
          const auto frob = ctx.frobenius_of_prime(e.p);
          if (!frob) {
            part.add_ramified(e);
            continue;
          }
          part.add({e.n, e.p, e.m, e.weight, e.m == 1 ? *frob : ctx.class_power(*frob, e.m)});
        }
        return part;
      },
      [&](const ResidueTable& part) { table.merge(part); }, exec);
  return table;
}

}  // namespace cheblab::cheb
