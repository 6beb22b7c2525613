#include "cheblab/galois.hpp"

#include <algorithm>
#include <array>
#include <climits>
#include <charconv>
#include <cstdlib>
#include <numeric>

#include "cheblab/arith.hpp"
#include "cheblab/errors.hpp"

namespace cheblab::galois {

Rational Rational::make(std::int64_t num, std::int64_t den) {
  if (den <= 0 || num < 0) throw ArgumentError("rational must be non-negative with positive denominator");
  const std::int64_t g = std::gcd(num, den);
  return {num / g, den / g};
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational::make(a.num * b.den + b.num * a.den, a.den * b.den);
}

namespace {

std::int64_t parse_int(std::string_view text, std::string_view spec) {
  std::int64_t v = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last || first == last) {
    throw SpecError("bad integer '" + std::string(text) + "' in context spec '" + std::string(spec) + "'");
  }
  return v;
}

using Poly = std::vector<std::uint64_t>;  // coefficients, low degree first, mod p

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// f mod g over F_p, g non-zero and trimmed.
Poly poly_mod(Poly f, const Poly& g, std::uint64_t p) {
  trim(f);
  const std::uint64_t lead_inv = arith::powmod(g.back(), p - 2, p);
  while (f.size() >= g.size()) {
    const std::uint64_t c = arith::mulmod(f.back(), lead_inv, p);
    const std::size_t shift = f.size() - g.size();
    for (std::size_t i = 0; i < g.size(); ++i) {
      f[shift + i] = (f[shift + i] + p - arith::mulmod(c, g[i], p)) % p;
    }
    trim(f);
  }
  return f;
}

std::size_t poly_gcd_degree(Poly f, Poly g, std::uint64_t p) {
  trim(f);
  trim(g);
  while (!g.empty()) {
    Poly r = poly_mod(f, g, p);
    f = std::move(g);
    g = std::move(r);
  }
  return f.empty() ? 0 : f.size() - 1;
}

}  // namespace

unsigned cubic_root_count(std::int64_t a, std::int64_t b, std::uint64_t p) {
  const std::uint64_t am = arith::mod_floor(a, p);
  const std::uint64_t bm = arith::mod_floor(b, p);
  if (p < 64) {
    unsigned roots = 0;
    for (std::uint64_t x = 0; x < p; ++x) {
      if ((x * x % p * x + am * x + bm) % p == 0) ++roots;
    }
    return roots;
  }

  // x^p mod f, f = x^3 + a x + b, using x^3 = -a x - b.
  using Res = std::array<std::uint64_t, 3>;
  auto mul = [&](const Res& u, const Res& v) {
    std::array<std::uint64_t, 5> w{};
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) w[i + j] = (w[i + j] + arith::mulmod(u[i], v[j], p)) % p;
    }
    for (int k = 4; k >= 3; --k) {
      const std::uint64_t c = w[k];
      w[k] = 0;
      w[k - 2] = (w[k - 2] + p - arith::mulmod(c, am, p)) % p;
      w[k - 3] = (w[k - 3] + p - arith::mulmod(c, bm, p)) % p;
    }
    return Res{w[0], w[1], w[2]};
  };
  Res result{1, 0, 0};
  Res base{0, 1, 0};
  for (std::uint64_t e = p; e != 0; e >>= 1) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
  }
  result[1] = (result[1] + p - 1) % p;  // x^p - x

  const Poly f{bm, am, 0, 1};
  const Poly r{result[0], result[1], result[2]};
  return static_cast<unsigned>(poly_gcd_degree(f, r, p));
}

GaloisContext GaloisContext::make(std::string_view spec) {
  GaloisContext ctx;
  const auto colon = spec.find(':');
  const std::string_view kind = spec.substr(0, colon);
  const std::string_view args = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);

  if (kind == "trivial" && colon == std::string_view::npos) {
    ctx.label_ = "trivial";
    ctx.family_ = Family::Trivial;
    ctx.group_order_ = 1;
    ctx.classes_ = {{"identity", 1, 1}};
    ctx.abs_disc_ = 1;
    return ctx;
  }

  if (kind == "quadratic" && colon != std::string_view::npos) {
    const std::int64_t d = parse_int(args, spec);
    if (!arith::is_fundamental_discriminant(d)) {
      throw SpecError("quadratic:" + std::to_string(d) + " is not a fundamental discriminant != 1");
    }
    ctx.label_ = "quadratic:" + std::to_string(d);
    ctx.family_ = Family::Quadratic;
    ctx.group_order_ = 2;
    ctx.classes_ = {{"split", 1, 1}, {"inert", 1, 1}};
    ctx.quad_d_ = d;
    const auto abs_d = static_cast<std::uint64_t>(std::llabs(d));
    ctx.ramified_ = arith::prime_divisors(abs_d);
    ctx.abs_disc_ = abs_d;
    return ctx;
  }

  if (kind == "cyclotomic" && colon != std::string_view::npos) {
    const std::int64_t raw = parse_int(args, spec);
    if (raw < 3) throw SpecError("cyclotomic modulus must be >= 3, got " + std::to_string(raw));
    auto m = static_cast<std::uint64_t>(raw);
    if (m % 4 == 2) m /= 2;  // Q(zeta_2k) = Q(zeta_k) for odd k
    if (m > (std::uint64_t{1} << 24)) throw SpecError("cyclotomic modulus too large for a class table");
    ctx.label_ = "cyclotomic:" + std::to_string(m);
    ctx.family_ = Family::Cyclotomic;
    ctx.cyclo_m_ = m;
    ctx.residue_class_.assign(m, -1);
    for (std::uint64_t r = 1; r < m; ++r) {
      if (arith::gcd(r, m) != 1) continue;
      ctx.residue_class_[r] = static_cast<std::int32_t>(ctx.classes_.size());
      ctx.class_residue_.push_back(r);
      ctx.classes_.push_back({std::to_string(r), 1, 1});
    }
    ctx.group_order_ = ctx.classes_.size();
    ctx.identity_ = ClassId{static_cast<std::uint32_t>(ctx.residue_class_[1])};
    ctx.ramified_ = arith::prime_divisors(m);

    // |d| = m^phi(m) / prod_{p | m} p^(phi(m)/(p-1))
    const std::uint64_t phi = ctx.group_order_;
    unsigned __int128 disc = 1;
    bool fits = true;
    for (const auto& [p, e] : arith::factor(m)) {
      const std::uint64_t exponent = phi * e - phi / (p - 1);
      for (std::uint64_t i = 0; i < exponent && fits; ++i) {
        disc *= p;
        if (disc > UINT64_MAX) fits = false;
      }
    }
    if (fits) ctx.abs_disc_ = static_cast<std::uint64_t>(disc);
    return ctx;
  }

  if (kind == "cubic-s3" && colon != std::string_view::npos) {
    const auto comma = args.find(',');
    if (comma == std::string_view::npos) throw SpecError("cubic-s3 needs two coefficients: cubic-s3:<a>,<b>");
    const std::int64_t a = parse_int(args.substr(0, comma), spec);
    const std::int64_t b = parse_int(args.substr(comma + 1), spec);
    const __int128 disc = -4 * static_cast<__int128>(a) * a * a - 27 * static_cast<__int128>(b) * b;
    if (disc > INT64_MAX || disc < INT64_MIN) throw SpecError("cubic discriminant overflows 64 bits");
    const auto d = static_cast<std::int64_t>(disc);

    // Monic integer cubic: reducible over Q iff it has an integer root, which divides b.
    auto has_root = [&](std::int64_t r) {
      const __int128 v = static_cast<__int128>(r) * r * r + static_cast<__int128>(a) * r + b;
      return v == 0;
    };
    bool reducible = (b == 0);
    const auto abs_b = static_cast<std::uint64_t>(std::llabs(b));
    for (std::uint64_t t = 1; !reducible && t <= abs_b / t; ++t) {
      if (abs_b % t != 0) continue;
      for (const std::uint64_t r : {t, abs_b / t}) {
        const auto sr = static_cast<std::int64_t>(r);
        if (has_root(sr) || has_root(-sr)) reducible = true;
      }
    }
    if (reducible) throw SpecError("x^3 + a x + b is reducible over Q for " + std::string(spec));
    if (d >= 0) {
      const std::uint64_t s = arith::isqrt(static_cast<std::uint64_t>(d));
      if (s * s == static_cast<std::uint64_t>(d)) {
        throw SpecError("square discriminant: Galois group is A3, not S3, for " + std::string(spec));
      }
    }

    ctx.label_ = "cubic-s3:" + std::to_string(a) + "," + std::to_string(b);
    ctx.family_ = Family::CubicS3;
    ctx.group_order_ = 6;
    ctx.classes_ = {{"identity", 1, 2}, {"transposition", 3, 3}, {"three-cycle", 2, 2}};
    ctx.cubic_a_ = a;
    ctx.cubic_b_ = b;
    const auto abs_d = static_cast<std::uint64_t>(std::llabs(d));
    ctx.ramified_ = arith::prime_divisors(abs_d);
    ctx.abs_disc_ = abs_d;
    return ctx;
  }

  throw SpecError("unknown context spec '" + std::string(spec) +
                  "'; expected trivial | quadratic:<d> | cyclotomic:<m> | cubic-s3:<a>,<b>");
}

const ClassInfo& GaloisContext::info(ClassId c) const {
  if (c.index >= classes_.size()) throw ArgumentError("unknown class index for context " + label_);
  return classes_[c.index];
}

ClassId GaloisContext::class_by_id(std::string_view id) const {
  for (std::uint32_t i = 0; i < classes_.size(); ++i) {
    if (classes_[i].id == id) return ClassId{i};
  }
  throw ArgumentError("context " + label_ + " has no class '" + std::string(id) + "'");
}

bool GaloisContext::is_ramified(std::uint64_t p) const {
  return std::binary_search(ramified_.begin(), ramified_.end(), p);
}

bool GaloisContext::coprime_to_disc(std::uint64_t q) const {
  return std::none_of(ramified_.begin(), ramified_.end(), [q](std::uint64_t p) { return q % p == 0; });
}

std::optional<ClassId> GaloisContext::frobenius(std::uint64_t p) const {
  if (!arith::is_prime(p)) throw ArgumentError("frobenius needs a prime, got " + std::to_string(p));
  return frobenius_of_prime(p);
}

std::optional<ClassId> GaloisContext::frobenius_of_prime(std::uint64_t p) const {
  if (is_ramified(p)) return std::nullopt;
  switch (family_) {
    case Family::Trivial:
      return ClassId{0};
    case Family::Quadratic:
      return ClassId{arith::kronecker(quad_d_, static_cast<std::int64_t>(p)) == 1 ? 0U : 1U};
    case Family::Cyclotomic:
      return ClassId{static_cast<std::uint32_t>(residue_class_[p % cyclo_m_])};
    case Family::CubicS3:
      switch (cubic_root_count(cubic_a_, cubic_b_, p)) {
        case 3:
          return ClassId{0};
        case 1:
          return ClassId{1};
        case 0:
          return ClassId{2};
        default:
          throw DomainError("cubic has exactly two roots mod " + std::to_string(p) + "; p must be ramified");
      }
  }
  return std::nullopt;
}

ClassId GaloisContext::class_power(ClassId c, std::uint64_t m) const {
  info(c);
  if (m == 0) throw ArgumentError("class_power exponent must be >= 1");
  switch (family_) {
    case Family::Trivial:
      return c;
    case Family::Quadratic:
      return (c.index == 1 && m % 2 == 0) ? ClassId{0} : c;
    case Family::Cyclotomic: {
      const std::uint64_t r = arith::powmod(class_residue_[c.index], m, cyclo_m_);
      return ClassId{static_cast<std::uint32_t>(residue_class_[r])};
    }
    case Family::CubicS3:
      if (c.index == 1) return m % 2 == 0 ? ClassId{0} : c;
      if (c.index == 2) return m % 3 == 0 ? ClassId{0} : c;
      return c;
  }
  return c;
}

Rational GaloisContext::class_density(ClassId c) const {
  return Rational::make(static_cast<std::int64_t>(info(c).size), static_cast<std::int64_t>(group_order_));
}

}  // namespace cheblab::galois
