#pragma once

#include "bettimap/legendre/section.hpp"
#include "bettimap/periods/periods.hpp"

namespace bettimap::ellog {

using mp::Complex;
using mp::Real;

// Elliptic logarithm z with wp(z) = x - (lambda + 1)/3 and wp'(z) = 2y for the
// lattice f Z + g Z, reduced so that z = a f + b g with a, b in [0, 1).
struct EllipticLog {
  Complex z;
  Complex lambda;
  Real residual;  // |wp(z) - (x - (lambda+1)/3)| + |wp'(z) - 2y|, relative
};

// Log of (x, y) on E_lambda given the periods at lambda; O maps to z = 0.
EllipticLog elliptic_log(const legendre::CurvePoint& p, const Complex& lambda, const periods::PeriodBasis& basis);

// Unreduced log: some z with wp(z) = x - (lambda+1)/3, wp'(z) = 2y, chosen
// as the representative nearest to `near`.
Complex elliptic_log_near(const legendre::CurvePoint& p, const Complex& lambda, const periods::PeriodBasis& basis,
                          const Complex& near);

struct LogDerivative {
  Complex dz;
  Complex d2z;
  Real convergence_ratio;  // successive-difference ratio of the central differences
  enum class Method { Richardson, OdeConsistency } method = Method::Richardson;
};

// Some z with wp(z) = x - (lambda+1)/3; the sign of wp'(z) is not controlled.
Complex log_of_x(const Complex& x, const Complex& lambda);

// Local data of a section at basis.lambda. z is the representative nearest
// to *near, or the reduced log when near is null. dz and d2z come from
// Richardson-extrapolated central differences with base step `step`, the log
// at each stencil point being pinned to z.
struct SectionLocal {
  Complex x, y, z;
  LogDerivative deriv;
};
SectionLocal section_local(const legendre::NumericSection& s, const periods::PeriodBasis& basis, const Complex& y,
                           const Complex* near, const Real& step);

// Default stencil step 2^(-prec/4) * radius at the current precision.
Real default_step(double radius);

// dz/dlambda (and d2z) for a section, y continued from the section's reference.
LogDerivative dz_dlambda(const legendre::Section& s, const Complex& lambda, const periods::PeriodBasis& basis,
                         double radius = 0.2);

}  // namespace bettimap::ellog
