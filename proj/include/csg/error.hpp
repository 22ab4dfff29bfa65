#pragma once

#include <stdexcept>
#include <string>

namespace csg {

// Raised when the input is well formed but the mathematics rules it out:
// degenerate cones, semigroups that fail the C-semigroup test, search
// horizons exceeded. Argument errors (dimension mismatch, zero directions,
// negative entries) use std::invalid_argument instead.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace csg
