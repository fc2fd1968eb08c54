#pragma once

#include "bettimap/exact/ratfunc.hpp"
#include "bettimap/mp/complex.hpp"

namespace bettimap::legendre {

using mp::Complex;
using mp::Real;

// Point of y^2 = x(x-1)(x-lambda) over C, or the point at infinity O.
struct CurvePoint {
  Complex x, y;
  bool infinity = false;

  static CurvePoint zero() {
    CurvePoint p;
    p.infinity = true;
    return p;
  }
};

// Rejects the singular fibres lambda = 0, 1.
void check_lambda(const Complex& lambda);

Complex curve_rhs(const Complex& x, const Complex& lambda);  // x(x-1)(x-lambda)
// d/dx of the right-hand side.
Complex curve_rhs_dx(const Complex& x, const Complex& lambda);
// Relative residual |y^2 - rhs| / max(1, |x|^3, |y|^2).
Real curve_residual(const CurvePoint& p, const Complex& lambda);
// True when the relative residual is below 2^(-prec/2).
bool on_curve(const CurvePoint& p, const Complex& lambda);

CurvePoint neg(const CurvePoint& p);
CurvePoint add(const CurvePoint& p, const CurvePoint& q, const Complex& lambda);
CurvePoint dbl(const CurvePoint& p, const Complex& lambda);
CurvePoint mul(long n, const CurvePoint& p, const Complex& lambda);

// x(x-1)(x-lambda) for x in Q(lambda).
exact::RatFunc curve_rhs(const exact::RatFunc& x);

}  // namespace bettimap::legendre
