#pragma once

#include <string>

#include "bettimap/mp/complex.hpp"

namespace bettimap {

// Closed disc in the lambda-plane. Valid discs have positive radius and stay
// away from the singular fibres 0 and 1.
struct Disc {
  double re = 0.5;
  double im = 0.0;
  double radius = 0.2;

  mp::Complex center() const { return mp::Complex(re, im); }
  bool contains(const mp::Complex& lambda, double slack = 0.0) const;
  // Distance from the centre to the nearer of 0 and 1.
  double singular_distance() const;
  // Empty string when valid, otherwise the violated constraint.
  std::string validate() const;
  std::string describe() const;
};

}  // namespace bettimap
