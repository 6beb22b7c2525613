#pragma once

#include <cstdint>

namespace cheblab {

// Execution policy shared by the parallel kernels. Results never depend on
// either field; they only change how the work is split.
struct Exec {
  static constexpr std::uint64_t kDefaultSegment = std::uint64_t{1} << 18;

  int workers = 0;  // 0: OpenMP default (OMP_NUM_THREADS / hardware)
  std::uint64_t segment_size = kDefaultSegment;

  int resolved_workers() const;
};

}  // namespace cheblab
