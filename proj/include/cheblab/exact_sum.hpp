#pragma once

#include <cmath>
#include <compare>
#include <cstdint>

#include "cheblab/errors.hpp"

namespace cheblab {

// Exact accumulator for sums of log p weights.
//
// Every double in [0.5, 2^10) is an integer multiple of 2^-53, so a weight
// log p (p >= 2) converts losslessly into an integer count of 2^-53 units.
// Sums are exact and associative, which makes class/residue partition
// identities hold bit-for-bit and makes results independent of how the work
// was split across threads. value() rounds once, correctly, to double.
class ExactSum {
 public:
  static constexpr int kFractionBits = 53;

  constexpr ExactSum() = default;

  static ExactSum from_weight(double w) {
    const double scaled = std::ldexp(w, kFractionBits);
    if (!(scaled >= 0.0) || scaled >= 0x1p63 || std::trunc(scaled) != scaled) {
      throw ArgumentError("weight is not an exact multiple of 2^-53");
    }
    ExactSum s;
    s.units_ = static_cast<__int128>(static_cast<std::int64_t>(scaled));
    return s;
  }

  double value() const {
    return std::ldexp(static_cast<double>(units_), -kFractionBits);
  }

  __int128 units() const { return units_; }

  ExactSum& operator+=(const ExactSum& o) {
    units_ += o.units_;
    return *this;
  }
  ExactSum& operator-=(const ExactSum& o) {
    units_ -= o.units_;
    return *this;
  }
  friend ExactSum operator+(ExactSum a, const ExactSum& b) { return a += b; }
  friend ExactSum operator-(ExactSum a, const ExactSum& b) { return a -= b; }
  friend bool operator==(const ExactSum&, const ExactSum&) = default;
  friend auto operator<=>(const ExactSum&, const ExactSum&) = default;

 private:
  __int128 units_ = 0;
};

}  // namespace cheblab
