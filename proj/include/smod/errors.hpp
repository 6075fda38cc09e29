#pragma once

#include <stdexcept>
#include <string>

namespace smod {

// Bad input shape: wrong sign, wrong residue class, unsupported parameter.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// exact_sqrt could not certify a square root in the requested radicands.
class NotASquare : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Some reduced form of the discriminant has b != 0.
class NotConvenient : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A numerical result failed its own residual check at the working precision.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace smod
