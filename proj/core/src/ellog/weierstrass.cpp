#include "bettimap/ellog/weierstrass.hpp"

#include <cmath>

#include "bettimap/error.hpp"

namespace bettimap::ellog {

namespace {

// Real coordinates of z in the basis (w1, w2).
void basis_coordinates(const Complex& z, const Complex& w1, const Complex& w2, Real& a, Real& b) {
  Complex delta = w1 * mp::conj(w2) - mp::conj(w1) * w2;
  a = ((z * mp::conj(w2) - mp::conj(z) * w2) / delta).re;
  b = ((mp::conj(z) * w1 - z * mp::conj(w1)) / delta).re;
}

}  // namespace

WeierstrassLattice::WeierstrassLattice(const Complex& w1, const Complex& w2) : w1_(w1), w2_(w2) {
  Complex a = w1, b = w2;
  Complex tau = b / a;
  if (tau.im.is_zero() || !tau.im.is_finite()) throw DomainError("degenerate lattice: periods are dependent");
  if (tau.im.sign() < 0) {
    b = -b;
    tau = -tau;
  }
  for (int it = 0; it < 200; ++it) {
    Real n = mp::round(tau.re);
    if (!n.is_zero()) {
      b -= a * n;
      tau = b / a;
    }
    if (mp::norm(tau) < Real(1) - mp::two_pow(-mp::precision() / 2)) {
      Complex na = b, nb = -a;
      a = na;
      b = nb;
      tau = b / a;
      continue;
    }
    break;
  }
  r1_ = a;
  r2_ = b;
  Complex ipi_tau = mp::mul_i(tau) * mp::pi();
  q_ = mp::exp(ipi_tau);
  q4_ = mp::exp(ipi_tau / 4);
  double lq = -std::log2(mp::abs(q_).to_double());
  int n = 1;
  while ((n * n - n) * lq < mp::precision() + 24) ++n;
  terms_ = n + 1;
  scale_ = Complex(mp::pi()) / r1_;
  Complex t1;
  thetas(Complex(), t1, t2z_, t3z_, t4z_);
  Complex c2 = scale_ * scale_;
  Complex t24 = mp::pow(t2z_, 4), t34 = mp::pow(t3z_, 4), t44 = mp::pow(t4z_, 4);
  e_[0] = c2 * (t34 + t44) / 3;
  e_[1] = c2 * (t24 - t44) / 3;
  e_[2] = -(c2 * (t24 + t34) / 3);
  g2_ = 2 * (e_[0] * e_[0] + e_[1] * e_[1] + e_[2] * e_[2]);
  g3_ = 4 * e_[0] * e_[1] * e_[2];
}

void WeierstrassLattice::thetas(const Complex& v, Complex& t1, Complex& t2, Complex& t3, Complex& t4) const {
  Complex E = mp::exp(mp::mul_i(v));
  Complex Einv = Complex(1) / E;
  Complex E2 = E * E, E2inv = Einv * Einv;
  Complex odd = E, oddinv = Einv;  // E^{2n+1}, E^{-(2n+1)}
  Complex even = E2, eveninv = E2inv;  // E^{2n}, E^{-2n} for n >= 1
  Complex qn2n(1);                  // q^{n^2 + n}
  Complex qn2 = q_;                 // q^{n^2} for n >= 1
  Complex q2n = q_ * q_;            // q^{2n} factor for the recursions
  Complex s1, s2, s3(1), s4(1);
  Complex qstep_odd = q_ * q_;      // q^{(n+1)^2 + (n+1)} / q^{n^2 + n} = q^{2n+2}
  Complex qstep_sq = q_ * q_ * q_;  // q^{(n+1)^2} / q^{n^2} = q^{2n+1}
  for (int n = 0; n < terms_; ++n) {
    Complex sn = odd - oddinv;  // 2i sin((2n+1)v)
    Complex cn = odd + oddinv;  // 2 cos((2n+1)v)
    Complex a = qn2n * sn, b = qn2n * cn;
    if (n % 2 == 0) s1 += a;
    else s1 -= a;
    s2 += b;
    if (n >= 1) {
      Complex ce = qn2 * (even + eveninv);
      s3 += ce;
      if (n % 2 == 0) s4 += ce;
      else s4 -= ce;
      qn2 *= qstep_sq;
      qstep_sq *= q2n;
      even *= E2;
      eveninv *= E2inv;
    }
    qn2n *= qstep_odd;
    qstep_odd *= q2n;
    odd *= E2;
    oddinv *= E2inv;
  }
  // s1 collects 2i sin terms: theta1 = 2 q^{1/4} sum (-1)^n q^{n^2+n} sin = q^{1/4} s1 / i.
  t1 = Complex(s1.im, -s1.re) * q4_;
  t2 = s2 * q4_;
  t3 = s3;
  t4 = s4;
}

Complex WeierstrassLattice::reduce(const Complex& z) const {
  Real a, b;
  basis_coordinates(z, r1_, r2_, a, b);
  return z - r1_ * mp::round(a) - r2_ * mp::round(b);
}

Complex WeierstrassLattice::wp(const Complex& z) const {
  Complex p, dp;
  wp_and_derivative(z, p, dp);
  return p;
}

void WeierstrassLattice::wp_and_derivative(const Complex& z, Complex& p, Complex& dp) const {
  Complex zr = reduce(z);
  if (zr.is_zero()) throw DomainError("wp evaluated at a lattice point");
  Complex v = scale_ * zr;
  Complex t1, t2, t3, t4;
  thetas(v, t1, t2, t3, t4);
  Complex c2 = scale_ * scale_;
  Complex p0 = t2z_ * t3z_ * t4z_;
  Complex ratio = t2z_ * t3z_ * t4 / t1;
  p = e_[2] + c2 * ratio * ratio;
  dp = -(2 * c2 * scale_ * p0 * p0 * t2 * t3 * t4 / (t1 * t1 * t1));
}

void WeierstrassLattice::coordinates(const Complex& z, Real& a, Real& b) const {
  basis_coordinates(z, w1_, w2_, a, b);
}

Complex WeierstrassLattice::nearest_representative(const Complex& z, const Complex& target) const {
  Real a, b;
  basis_coordinates(target - z, w1_, w2_, a, b);
  Real ra = mp::round(a), rb = mp::round(b);
  Complex best;
  Real best_d(-1);
  for (int da = -1; da <= 1; ++da)
    for (int db = -1; db <= 1; ++db) {
      Complex c = z + w1_ * (ra + da) + w2_ * (rb + db);
      Real d = mp::norm(c - target);
      if (best_d.sign() < 0 || d < best_d) {
        best_d = d;
        best = c;
      }
    }
  return best;
}

}  // namespace bettimap::ellog
