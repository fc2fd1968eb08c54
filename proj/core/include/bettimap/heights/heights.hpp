#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bettimap/exact/poly.hpp"
#include "bettimap/exact/rational.hpp"
#include "bettimap/mp/complex.hpp"

namespace bettimap::heights {

using exact::RatPoly;
using exact::Rational;
using mp::Complex;
using mp::Real;

// H(a/b) = max(|a|, |b|).
using exact::rational_height_H;

// An algebraic number: its minimal polynomial over Q and an approximation
// picking out one conjugate.
struct AlgebraicNumber {
  RatPoly minpoly;
  Complex approx;

  static AlgebraicNumber rational(const Rational& q);
  int degree() const { return minpoly.degree(); }
};

// Absolute logarithmic Weil height through the Mahler measure of the
// primitive integer minimal polynomial. Throws DomainError when the
// polynomial is not irreducible over Q.
Real weil_height(const AlgebraicNumber& x);

// Tries to recognise z as a root of an irreducible integer polynomial of
// degree d <= max_degree with coefficients below 2^(target/(2(d+1)));
// the root must be reproduced to 2^(-target/2).
std::optional<AlgebraicNumber> recognize_algebraic(const Complex& z, int max_degree);

struct CanonicalHeight {
  Real value;       // h(x(2^K P)) / 4^K
  Real tolerance;   // tail bound from the observed doubling defects
  int iterations = 0;
  bool torsion = false;               // 2^k P = O for some k <= K
  std::vector<Real> cauchy_gaps;      // |h_{k+1} - h_k|
};

// Neron-Tate height of P = (x, y) on y^2 = x(x-1)(x-lambda) for rational
// x and lambda, normalised as lim h(x(2^k P)) / 4^k. Runs K doublings;
// throws NumericalError "increase precision" once a coordinate needs more
// than max_bits bits.
CanonicalHeight canonical_height(const Rational& x, const Rational& lambda, int K = 8, long max_bits = 1L << 24);

// Weil height of the abscissa: log H(x).
Real naive_height(const Rational& x);

}  // namespace bettimap::heights
