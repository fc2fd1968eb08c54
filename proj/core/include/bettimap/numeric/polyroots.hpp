#pragma once

#include <vector>

#include "bettimap/exact/poly.hpp"
#include "bettimap/mp/complex.hpp"

namespace bettimap::numeric {

// All complex roots of a squarefree polynomial at the working precision
// (Aberth-Ehrlich iteration, seeded in extended double precision). Repeated
// roots are still found but only to about half the working precision.
std::vector<mp::Complex> polynomial_roots(const exact::RatPoly& p);

// Same for a polynomial with complex coefficients (ascending order).
std::vector<mp::Complex> polynomial_roots(const std::vector<mp::Complex>& coeffs);

}  // namespace bettimap::numeric
