#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cheblab/exec.hpp"
#include "cheblab/galois.hpp"

// Averaged short-interval error for Chebotarev progressions:
//
//   E = sum'_{q <= Q} max_{(a,q)=1} max_{y <= h} max_{x/2 <= N <= x}
//         | psi_C(N + y; q, a) - psi_C(N; q, a) - (|C|/|G|) y / phi(q) |
//
// where sum' runs over q coprime to d_L. The max over a is exact. The max
// over (N, y) is taken on a sampled grid (default 8 x 8, log-spaced, always
// containing the corner N = x, y = h); exact maximisation costs O(x h). The
// sampled value is therefore a lower bound for the true statistic.
namespace cheblab::bv {

struct Validation {
  bool ok = true;
  std::string violation;
};

// delta < 2 / (5 n_E) and theta < (2 / (5 n_E) - delta) / 3, both strict.
Validation validate_params(std::uint64_t n_E, double delta, double theta);

struct GridSize {
  std::size_t n_N = 8;
  std::size_t n_y = 8;
};

struct BVParams {
  galois::GaloisContext ctx;
  galois::ClassId cls;
  std::uint64_t x = 0;
  double delta = 0.0;
  double theta = 0.0;
  double D = 1.0;
  std::optional<std::uint64_t> h;  // default ceil(x^(1 - delta))
  std::optional<std::uint64_t> Q;  // default floor(x^theta)
  GridSize grid;
  bool strict = true;

  std::uint64_t resolved_h() const;
  std::uint64_t resolved_Q() const;
};

struct BVRow {
  std::uint64_t q;
  std::uint64_t a_star;
  std::uint64_t N_star;
  std::uint64_t y_star;
  double observed;
  double main_term;
  double abs_error;
};

struct BVReport {
  BVParams params;
  std::uint64_t h;
  std::uint64_t Q;
  std::vector<BVRow> rows;  // ascending q
  double total;             // sum of abs_error in row order
  double normalized_ratio;  // total * (log x)^D / h
  double grh_comparator;    // sqrt(x) (log Q x)^2
};

// sqrt(x) * (log(Q x))^2
double grh_comparator(double x, double Q);

// Sampled (N, y) cells, sorted and deduplicated; includes (x, h).
std::vector<std::pair<std::uint64_t, std::uint64_t>> sample_grid(std::uint64_t x, std::uint64_t h, GridSize grid);

BVReport bv_error_sum(const BVParams& params, const Exec& exec = {});

// One report per x = x_min * 2^j <= x_max, with h and Q recomputed from
// delta and theta at every point.
std::vector<BVReport> dyadic_scan(const BVParams& params, std::uint64_t x_min, std::uint64_t x_max,
                                  const Exec& exec = {});

}  // namespace cheblab::bv
