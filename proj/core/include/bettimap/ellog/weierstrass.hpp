#pragma once

#include "bettimap/mp/complex.hpp"

namespace bettimap::ellog {

using mp::Complex;
using mp::Real;

// Weierstrass functions of the lattice Z w1 + Z w2 (full periods), computed
// from Jacobi theta series after reducing tau = w2/w1 to the fundamental
// domain and z to the fundamental parallelogram.
class WeierstrassLattice {
 public:
  WeierstrassLattice(const Complex& w1, const Complex& w2);

  Complex wp(const Complex& z) const;
  void wp_and_derivative(const Complex& z, Complex& p, Complex& dp) const;
  Complex g2() const { return g2_; }
  Complex g3() const { return g3_; }
  // e1, e2, e3: wp at r1/2, (r1+r2)/2 and r2/2 for the reduced basis (r1, r2).
  const Complex& e(int i) const { return e_[i]; }

  // Real coordinates (a, b) with z = a w1 + b w2 in the original basis.
  void coordinates(const Complex& z, Real& a, Real& b) const;
  // Representative of z modulo the lattice nearest to `target`.
  Complex nearest_representative(const Complex& z, const Complex& target) const;

  const Complex& w1() const { return w1_; }
  const Complex& w2() const { return w2_; }
  const Complex& r1() const { return r1_; }
  const Complex& r2() const { return r2_; }

 private:
  void thetas(const Complex& v, Complex& t1, Complex& t2, Complex& t3, Complex& t4) const;
  Complex reduce(const Complex& z) const;

  Complex w1_, w2_;      // as given
  Complex r1_, r2_;      // reduced basis, Im(r2/r1) > 0
  Complex q_, q4_;       // nome e^{i pi tau} and its fourth root
  int terms_ = 0;
  Complex scale_;        // pi / r1
  Complex t2z_, t3z_, t4z_;
  Complex g2_, g3_;
  Complex e_[3];
};

}  // namespace bettimap::ellog
