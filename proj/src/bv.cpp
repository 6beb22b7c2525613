#include "cheblab/bv.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <sstream>

#include "cheblab/arith.hpp"
#include "cheblab/cheb_psi.hpp"
#include "cheblab/errors.hpp"
#include "cheblab/exact_sum.hpp"

namespace cheblab::bv {

Validation validate_params(std::uint64_t n_E, double delta, double theta) {
  if (n_E == 0) return {false, "n_E must be >= 1"};
  if (delta < 0.0 || theta < 0.0) return {false, "delta and theta must be non-negative"};
  const double delta_bound = 2.0 / (5.0 * static_cast<double>(n_E));
  std::ostringstream msg;
  if (!(delta < delta_bound)) {
    msg << "delta = " << delta << " violates delta < 2/(5 n_E) = " << delta_bound << " (n_E = " << n_E << ")";
    return {false, msg.str()};
  }
  const double theta_bound = (delta_bound - delta) / 3.0;
  if (!(theta < theta_bound)) {
    msg << "theta = " << theta << " violates theta < (2/(5 n_E) - delta)/3 = " << theta_bound;
    return {false, msg.str()};
  }
  return {};
}

std::uint64_t BVParams::resolved_h() const {
  if (h) return *h;
  const long double v = std::pow(static_cast<long double>(x), 1.0L - static_cast<long double>(delta));
  return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::ceil(v - 1e-9L)));
}

std::uint64_t BVParams::resolved_Q() const {
  if (Q) return *Q;
  const long double v = std::pow(static_cast<long double>(x), static_cast<long double>(theta));
  return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::floor(v + 1e-9L)));
}

double grh_comparator(double x, double Q) {
  const double l = std::log(Q * x);
  return std::sqrt(x) * l * l;
}

namespace {

// count log-spaced integers between lo and hi inclusive, both endpoints kept.
std::vector<std::uint64_t> log_spaced(std::uint64_t lo, std::uint64_t hi, std::size_t count) {
  std::vector<std::uint64_t> out;
  if (count == 1) return {hi};
  const double llo = std::log(static_cast<double>(lo));
  const double lhi = std::log(static_cast<double>(hi));
  for (std::size_t i = 0; i < count; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(count - 1);
    auto v = static_cast<std::uint64_t>(std::llround(std::exp(llo + t * (lhi - llo))));
    out.push_back(std::clamp(v, lo, hi));
  }
  out.front() = lo;
  out.back() = hi;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<std::pair<std::uint64_t, std::uint64_t>> sample_grid(std::uint64_t x, std::uint64_t h, GridSize grid) {
  if (grid.n_N == 0 || grid.n_y == 0) throw ConfigError("empty (N, y) sampling grid");
  if (x < 2 || h == 0) throw ConfigError("grid needs x >= 2 and h >= 1");
  const auto Ns = log_spaced((x + 1) / 2, x, grid.n_N);
  const auto ys = log_spaced(1, h, grid.n_y);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> cells;
  for (const auto N : Ns) {
    for (const auto y : ys) cells.emplace_back(N, y);
  }
  cells.emplace_back(x, h);
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  return cells;
}

BVReport bv_error_sum(const BVParams& params, const Exec& exec) {
  const auto& ctx = params.ctx;
  const auto& info = ctx.info(params.cls);
  if (params.strict) {
    const auto v = validate_params(info.n_E, params.delta, params.theta);
    if (!v.ok) throw ConfigError(v.violation);
  }
  const std::uint64_t x = params.x;
  const std::uint64_t h = params.resolved_h();
  const std::uint64_t Q = params.resolved_Q();
  if (Q >= x) throw ConfigError("Q >= x leaves no admissible moduli regime");
  if (x > std::numeric_limits<std::uint64_t>::max() - h) throw RangeError("x + h overflows 64 bits");

  const auto cells = sample_grid(x, h, params.grid);

  std::vector<std::uint64_t> endpoints;
  for (const auto& [N, y] : cells) {
    endpoints.push_back(N);
    endpoints.push_back(N + y);
  }
  std::sort(endpoints.begin(), endpoints.end());
  endpoints.erase(std::unique(endpoints.begin(), endpoints.end()), endpoints.end());
  auto endpoint_index = [&](std::uint64_t e) {
    return static_cast<std::size_t>(std::lower_bound(endpoints.begin(), endpoints.end(), e) - endpoints.begin());
  };

  const std::uint64_t lo = endpoints.front();
  const std::uint64_t hi = endpoints.back();
  std::vector<cheb::ChebotarevEvent> events;
  for (const auto& e : cheb::cheb_events(ctx, sieve::Interval::make(lo, hi - lo), exec)) {
    if (e.cls == params.cls) events.push_back(e);
  }

  std::vector<std::uint64_t> moduli;
  for (std::uint64_t q = 1; q <= Q; ++q) {
    if (ctx.coprime_to_disc(q)) moduli.push_back(q);
  }

  std::vector<BVRow> rows(moduli.size());
  std::exception_ptr failure;
  const auto count = static_cast<std::int64_t>(moduli.size());

#pragma omp parallel for schedule(dynamic, 1) num_threads(exec.resolved_workers())
  for (std::int64_t qi = 0; qi < count; ++qi) {
    try {
      const std::uint64_t q = moduli[static_cast<std::size_t>(qi)];
      // prefix[k * q + a] = sum over class events lo < n <= endpoints[k], n = a mod q
      std::vector<ExactSum> prefix(endpoints.size() * q);
      std::vector<ExactSum> acc(q);
      std::size_t next = 0;
      for (std::size_t k = 0; k < endpoints.size(); ++k) {
        for (; next < events.size() && events[next].n <= endpoints[k]; ++next) {
          acc[events[next].n % q] += ExactSum::from_weight(events[next].weight);
        }
        std::copy(acc.begin(), acc.end(), prefix.begin() + static_cast<std::ptrdiff_t>(k * q));
      }

      BVRow best{q, 0, 0, 0, 0.0, 0.0, -1.0};
      for (std::uint64_t a = 0; a < q; ++a) {
        if (arith::gcd(a, q) != 1) continue;
        for (const auto& [N, y] : cells) {
          const ExactSum window = prefix[endpoint_index(N + y) * q + a] - prefix[endpoint_index(N) * q + a];
          const double observed = window.value();
          const double expected = cheb::main_term(ctx, params.cls, static_cast<double>(y), q);
          const double err = std::abs(observed - expected);
          if (err > best.abs_error) best = {q, a, N, y, observed, expected, err};
        }
      }
      rows[static_cast<std::size_t>(qi)] = best;
    } catch (...) {
#pragma omp critical(cheblab_bv_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  double total = 0.0;
  for (const auto& r : rows) total += r.abs_error;
  const double lx = std::log(static_cast<double>(x));
  return BVReport{params,
                  h,
                  Q,
                  std::move(rows),
                  total,
                  total * std::pow(lx, params.D) / static_cast<double>(h),
                  grh_comparator(static_cast<double>(x), static_cast<double>(Q))};
}

std::vector<BVReport> dyadic_scan(const BVParams& params, std::uint64_t x_min, std::uint64_t x_max,
                                  const Exec& exec) {
  if (x_min < 100) throw ArgumentError("dyadic scan needs x_min >= 100");
  if (x_max < x_min) throw ArgumentError("dyadic scan needs x_max >= x_min");
  std::vector<BVReport> out;
  for (std::uint64_t x = x_min; x <= x_max; x *= 2) {
    BVParams p = params;
    p.x = x;
    p.h.reset();
    p.Q.reset();
    out.push_back(bv_error_sum(p, exec));
    if (x > std::numeric_limits<std::uint64_t>::max() / 2) break;
  }
  return out;
}

}  // namespace cheblab::bv
