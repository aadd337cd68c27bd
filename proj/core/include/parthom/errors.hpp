#pragma once

#include <stdexcept>

namespace parthom {

/// A request exceeds a documented feasibility bound (n too large, simplex
/// budget exceeded). Raised before any expensive work starts where possible.
class FeasibilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace parthom
