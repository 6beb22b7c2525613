#pragma once

#include <stdexcept>

namespace cheblab {

// Every failure raised by the library derives from Error. The CLI maps the
// subclasses onto exit codes (usage 2, domain 3, range 4).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed spec strings: contexts, eta/theta forms, curves, tuples.
class SpecError : public Error {
 public:
  using Error::Error;
};

class ArgumentError : public Error {
 public:
  using Error::Error;
};

// Run configuration that leaves nothing to compute (empty grids, Q >= x, ...).
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Mathematically undefined requests, e.g. a main term with (q, d_L) > 1.
class DomainError : public Error {
 public:
  using Error::Error;
};

// 64-bit overflow, truncation exceeded, evaluation caps exceeded.
class RangeError : public Error {
 public:
  using Error::Error;
};

}  // namespace cheblab
