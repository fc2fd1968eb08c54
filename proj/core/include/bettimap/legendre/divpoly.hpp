#pragma once

#include <map>

#include "bettimap/exact/bivar.hpp"

namespace bettimap::legendre {

// Normalised division polynomials f_n in Q[lambda][x] of the Legendre curve:
// f_n = psi_n for odd n and f_n = psi_n / (2y) for even n, built with the
// standard duplication recurrences. f_{-n} = -f_n.
class DivisionPolySystem {
 public:
  DivisionPolySystem();
  const exact::BivarPoly& f(int n);
  // psi_n^2 as a polynomial in x: f_n^2, or 4 x(x-1)(x-lambda) f_n^2 for even n.
  exact::BivarPoly psi_squared(int n);
  const exact::BivarPoly& curve_rhs() const { return F_; }

 private:
  exact::BivarPoly F_;
  std::map<int, exact::BivarPoly> memo_;
};

exact::BivarPoly division_poly(int n);

// Degree in x of f_n: (n^2-1)/2 for odd n, (n^2-4)/2 for even n.
int division_poly_degree(int n);

// The sequence f_n(X(lambda), lambda) along a section X = p/q, homogenised:
// fhat(n) = q^deg(f_n) * f_n(p/q, lambda), a polynomial in lambda.
class SectionDivisionSequence {
 public:
  explicit SectionDivisionSequence(const exact::RatFunc& X);
  const exact::RatPoly& fhat(int n);
  const exact::RatPoly& Fhat() const { return Fh_; }  // q^3 * X(X-1)(X-lambda)
  exact::RatFunc f_at(int n);                          // f_n(X, lambda)
  const exact::RatFunc& X() const { return X_; }

 private:
  exact::RatFunc X_;
  exact::RatPoly Fh_;
  std::map<int, exact::RatPoly> memo_;
};

// x(nP) for the point P with abscissa X. Throws DomainError("multiple is
// identically infinity") when nP = O identically.
exact::RatFunc x_of_multiple(int n, const exact::RatFunc& X);
exact::RatFunc x_of_multiple(int n, SectionDivisionSequence& seq);

}  // namespace bettimap::legendre
