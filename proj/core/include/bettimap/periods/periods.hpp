#pragma once

#include <array>
#include <vector>

#include "bettimap/disc.hpp"
#include "bettimap/mp/complex.hpp"

namespace bettimap::periods {

using mp::Complex;
using mp::Real;

// Gauss hypergeometric F(1/2, 1/2; 1; lambda) on C minus [1, inf): power
// series for |lambda| <= 3/4, analytic continuation of the hypergeometric
// equation beyond. Throws DomainError at lambda = 1 and on the cut.
Complex hyp_f(const Complex& lambda);
// F and dF/dlambda.
void hyp_f2(const Complex& lambda, Complex& F, Complex& dF);

// lambda(1-lambda) w'' + (1-2 lambda) w' - w/4.
Complex ode_residual(const Complex& lambda, const Complex& w, const Complex& dw, const Complex& d2w);

// Solution of the period equation at a point: value and two derivatives.
struct Jet2 {
  Complex w, dw, d2w;
};

// Period basis f = pi F(lambda), g = i pi F(1 - lambda) and derivatives,
// continued from the reference point along `path`.
struct PeriodBasis {
  Complex lambda;
  Complex f, g, df, dg, d2f, d2g;
  std::vector<Complex> path;

  // dg recovered from f, df, g and the Wronskian constant.
  Complex dg_from_wronskian(const Complex& k) const;
  Complex wronskian_constant() const;  // (f dg - g df)(lambda^2 - lambda)
};

// Taylor coefficients of the solution with w(c) = w0, w'(c) = w1.
std::vector<Complex> taylor_coefficients(const Complex& c, const Complex& w0, const Complex& w1, int terms);

// Continues (w, w') along the straight segment [from, to] with Taylor steps
// no longer than half the distance to {0, 1}.
void transport(const Complex& from, const Complex& to, Complex& w, Complex& dw);

// Continues the basis from the reference point along a polyline (first
// vertex is the reference point). Works at the current precision.
PeriodBasis period_basis_along(const std::vector<Complex>& path);
PeriodBasis period_basis_at(const Complex& lambda, const Complex& reference = Complex(0.5));

// f and g at basis.lambda + h for small h, from the local Taylor expansion.
void local_values(const PeriodBasis& basis, const Complex& h, Complex& f, Complex& g);

// Integer matrix M with (f~, g~) = M (f, g) after continuation around a loop.
struct Monodromy {
  std::array<std::array<long, 2>, 2> m;
  Real defect;  // distance of the real solution from the integer matrix
  long det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }
};
Monodromy monodromy(const std::vector<Complex>& loop);

// Period data on a disc: the basis is carried from the reference point to
// the centre once, then each point of the disc is evaluated from a single
// cached Taylor jet. All values are produced at the precision that was
// current at construction.
class PeriodField {
 public:
  explicit PeriodField(const Disc& disc, const Complex& reference = Complex(0.5));

  PeriodBasis evaluate(const Complex& lambda) const;
  // Values of f and g at lambda + h for a small offset h, from the local
  // Taylor expansion at lambda of an already evaluated basis.
  void nearby(const PeriodBasis& at, const Complex& h, Complex& f, Complex& g) const;

  const Complex& wronskian_constant() const { return k_; }
  const Disc& disc() const { return disc_; }
  long bits() const { return bits_; }
  int jet_terms() const { return int(fc_.size()); }

 private:
  Disc disc_;
  long bits_;
  Complex center_;
  Real jet_radius_;
  std::vector<Complex> path_;
  std::vector<Complex> fc_, gc_;
  Complex k_;
};

}  // namespace bettimap::periods
