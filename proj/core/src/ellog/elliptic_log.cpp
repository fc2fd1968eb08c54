#include "bettimap/ellog/elliptic_log.hpp"

#include <array>
#include <cmath>

#include "bettimap/ellog/carlson.hpp"
#include "bettimap/ellog/weierstrass.hpp"
#include "bettimap/error.hpp"

namespace bettimap::ellog {

namespace {

double angle_gap(double a, double b) {
  double d = std::fabs(std::remainder(a - b, 2 * M_PI));
  return d;
}

Complex shifted_x(const Complex& x, const Complex& lambda) { return x - (lambda + 1) / 3; }

// Candidate +z0 or -z0 whose wp' matches 2y.
Complex signed_log(const WeierstrassLattice& L, const legendre::CurvePoint& p, const Complex& lambda) {
  Complex z0 = log_of_x(p.x, lambda);
  if (z0.is_zero()) return z0;
  Complex wp, dwp;
  L.wp_and_derivative(z0, wp, dwp);
  Complex y2 = p.y * 2;
  if (mp::norm(dwp - y2) > mp::norm(dwp + y2)) z0 = -z0;
  return z0;
}

Real log_residual(const WeierstrassLattice& L, const legendre::CurvePoint& p, const Complex& lambda,
                  const Complex& z) {
  Real a, b;
  L.coordinates(z, a, b);
  Real tol = mp::two_pow(-mp::precision() / 2);
  if (mp::abs(a - mp::round(a)) < tol && mp::abs(b - mp::round(b)) < tol) return Real(0);
  Complex wp, dwp;
  L.wp_and_derivative(z, wp, dwp);
  Complex X = shifted_x(p.x, lambda);
  Complex Y = p.y * 2;
  return mp::abs(wp - X) / mp::max(Real(1), mp::abs(X)) + mp::abs(dwp - Y) / mp::max(Real(1), mp::abs(Y));
}

Real wrap_unit(Real a) {
  a -= mp::floor(a);
  if (a > Real(1) - mp::two_pow(-mp::precision() / 2)) a = Real(0);
  return a;
}

}  // namespace

Complex log_of_x(const Complex& x, const Complex& lambda) {
  legendre::check_lambda(lambda);
  // Integrate from x to infinity along a ray that keeps away from 0, 1, lambda.
  std::array<double, 3> dirs;
  Complex es[3] = {Complex(0), Complex(1), lambda};
  int nd = 0;
  for (const auto& e : es) {
    Complex d = e - x;
    if (!d.is_zero()) dirs[nd++] = mp::arg(d).to_double();
  }
  auto clearance = [&](double th) {
    double m = M_PI;
    for (int i = 0; i < nd; ++i) m = std::min(m, angle_gap(th, dirs[i]));
    return m;
  };
  double best = 0, best_c = clearance(0);
  if (best_c < 0.25) {
    for (int k = 1; k < 32; ++k) {
      double th = 2 * M_PI * k / 32;
      double c = clearance(th);
      if (c > best_c + 1e-12) {
        best_c = c;
        best = th;
      }
    }
  }
  if (best == 0) return carlson_rf(x, x - 1, x - lambda);
  Complex u = mp::expi(Real(best));
  Complex ui = mp::conj(u);
  return carlson_rf(x * ui, (x - 1) * ui, (x - lambda) * ui) * mp::sqrt(ui);
}

EllipticLog elliptic_log(const legendre::CurvePoint& p, const Complex& lambda, const periods::PeriodBasis& basis) {
  EllipticLog out;
  out.lambda = lambda;
  if (p.infinity) return out;
  WeierstrassLattice L(basis.f, basis.g);
  Complex z = signed_log(L, p, lambda);
  Real a, b;
  L.coordinates(z, a, b);
  a = wrap_unit(a);
  b = wrap_unit(b);
  out.z = basis.f * a + basis.g * b;
  out.residual = log_residual(L, p, lambda, out.z);
  return out;
}

Complex elliptic_log_near(const legendre::CurvePoint& p, const Complex& lambda, const periods::PeriodBasis& basis,
                          const Complex& near) {
  WeierstrassLattice L(basis.f, basis.g);
  if (p.infinity) return L.nearest_representative(Complex(), near);
  return L.nearest_representative(signed_log(L, p, lambda), near);
}

Real default_step(double radius) { return mp::two_pow(-mp::precision() / 4) * Real(radius); }

SectionLocal section_local(const legendre::NumericSection& s, const periods::PeriodBasis& basis, const Complex& y,
                           const Complex* near, const Real& step) {
  SectionLocal out;
  const Complex& lambda = basis.lambda;
  if (s.is_identity()) {
    out.x = Complex();
    out.y = Complex();
    WeierstrassLattice L(basis.f, basis.g);
    out.z = near ? L.nearest_representative(Complex(), *near) : Complex();
    out.deriv.convergence_ratio = Real(4);
    // Constant lattice point m f + n g: its derivative follows the periods.
    Real a, b;
    L.coordinates(out.z, a, b);
    out.deriv.dz = basis.df * mp::round(a) + basis.dg * mp::round(b);
    out.deriv.d2z = basis.d2f * mp::round(a) + basis.d2g * mp::round(b);
    return out;
  }
  out.x = s.x(lambda);
  out.y = y;
  legendre::CurvePoint pt{out.x, out.y, false};
  if (near) {
    out.z = elliptic_log_near(pt, lambda, basis, *near);
  } else {
    out.z = elliptic_log(pt, lambda, basis).z;
  }
  Real cut = mp::abs(basis.f) / 4;
  auto zeta = [&](const Complex& h) {
    Complex f, g;
    periods::local_values(basis, h, f, g);
    Complex lam = lambda + h;
    Complex x = s.x(lam);
    Complex z0 = log_of_x(x, lam);
    Complex best;
    Real best_d(-1);
    Complex ws[2] = {f, g};
    for (int sg = -1; sg <= 1; sg += 2) {
      Complex c = z0 * long(sg);
      Complex delta = c - out.z;
      Complex den = ws[0] * mp::conj(ws[1]) - mp::conj(ws[0]) * ws[1];
      Real a = ((delta * mp::conj(ws[1]) - mp::conj(delta) * ws[1]) / den).re;
      Real b = ((mp::conj(delta) * ws[0] - delta * mp::conj(ws[0])) / den).re;
      Complex r = c - ws[0] * mp::round(a) - ws[1] * mp::round(b);
      Real d = mp::abs(r - out.z);
      if (best_d.sign() < 0 || d < best_d) {
        best_d = d;
        best = r;
      }
    }
    if (best_d > cut) throw NumericalError("stencil crosses cut at lambda = " + lambda.str(12));
    return best;
  };
  Real hs[3] = {step, step / 2, step / 4};
  Complex D[3], S[3];
  for (int i = 0; i < 3; ++i) {
    Complex h(hs[i]);
    Complex zp = zeta(h), zm = zeta(-h);
    D[i] = (zp - zm) / (hs[i] * 2);
    S[i] = (zp - out.z * 2 + zm) / (hs[i] * hs[i]);
  }
  Complex d1 = (D[1] * 4 - D[0]) / 3, d2 = (D[2] * 4 - D[1]) / 3;
  Complex s1 = (S[1] * 4 - S[0]) / 3, s2 = (S[2] * 4 - S[1]) / 3;
  out.deriv.dz = (d2 * 16 - d1) / 15;
  out.deriv.d2z = (s2 * 16 - s1) / 15;
  Real den = mp::abs(D[1] - D[2]);
  out.deriv.convergence_ratio = den.is_zero() ? Real(4) : mp::abs(D[0] - D[1]) / den;
  return out;
}

LogDerivative dz_dlambda(const legendre::Section& s, const Complex& lambda, const periods::PeriodBasis& basis,
                         double radius) {
  legendre::NumericSection ns(s);
  Complex y = s.is_identity() ? Complex() : ns.y(lambda);
  return section_local(ns, basis, y, nullptr, default_step(radius)).deriv;
}

}  // namespace bettimap::ellog
