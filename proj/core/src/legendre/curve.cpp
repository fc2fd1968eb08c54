#include "bettimap/legendre/curve.hpp"

#include "bettimap/error.hpp"

namespace bettimap::legendre {

namespace {
Real half_precision_tol() { return mp::two_pow(-mp::precision() / 2); }

bool close(const Complex& a, const Complex& b) {
  Real scale = mp::max(Real(1), mp::max(mp::abs(a), mp::abs(b)));
  return mp::abs(a - b) <= half_precision_tol() * scale;
}
}  // namespace

void check_lambda(const Complex& lambda) {
  Real tol = mp::two_pow(-mp::precision() + 8);
  if (mp::abs(lambda) <= tol || mp::abs(lambda - 1) <= tol)
    throw DomainError("lambda must avoid the singular fibres 0 and 1");
}

Complex curve_rhs(const Complex& x, const Complex& lambda) { return x * (x - 1) * (x - lambda); }

Complex curve_rhs_dx(const Complex& x, const Complex& lambda) {
  // 3x^2 - 2(1 + lambda)x + lambda
  return 3 * x * x - 2 * (lambda + 1) * x + lambda;
}

Real curve_residual(const CurvePoint& p, const Complex& lambda) {
  if (p.infinity) return Real(0);
  Real ax = mp::abs(p.x), ay = mp::abs(p.y);
  Real scale = mp::max(Real(1), mp::max(ax * ax * ax, ay * ay));
  return mp::abs(p.y * p.y - curve_rhs(p.x, lambda)) / scale;
}

bool on_curve(const CurvePoint& p, const Complex& lambda) {
  return curve_residual(p, lambda) <= half_precision_tol();
}

CurvePoint neg(const CurvePoint& p) {
  if (p.infinity) return p;
  CurvePoint r;
  r.x = p.x;
  r.y = -p.y;
  return r;
}

CurvePoint dbl(const CurvePoint& p, const Complex& lambda) {
  if (p.infinity) return p;
  Real scale = mp::max(Real(1), mp::abs(p.x));
  if (mp::abs(p.y) <= half_precision_tol() * scale * scale) return CurvePoint::zero();
  Complex m = curve_rhs_dx(p.x, lambda) / (2 * p.y);
  CurvePoint r;
  r.x = m * m + (lambda + 1) - 2 * p.x;
  r.y = -(p.y + m * (r.x - p.x));
  return r;
}

CurvePoint add(const CurvePoint& p, const CurvePoint& q, const Complex& lambda) {
  if (p.infinity) return q;
  if (q.infinity) return p;
  if (close(p.x, q.x)) {
    if (close(p.y, -q.y)) return CurvePoint::zero();
    return dbl(p, lambda);
  }
  Complex m = (q.y - p.y) / (q.x - p.x);
  CurvePoint r;
  r.x = m * m + (lambda + 1) - p.x - q.x;
  r.y = -(p.y + m * (r.x - p.x));
  return r;
}

CurvePoint mul(long n, const CurvePoint& p, const Complex& lambda) {
  if (n < 0) return mul(-n, neg(p), lambda);
  CurvePoint acc = CurvePoint::zero(), base = p;
  while (n > 0) {
    if (n & 1) acc = add(acc, base, lambda);
    n >>= 1;
    if (n) base = dbl(base, lambda);
  }
  return acc;
}

exact::RatFunc curve_rhs(const exact::RatFunc& x) {
  exact::RatFunc lam(exact::RatPoly::variable());
  return x * (x - exact::RatFunc(1)) * (x - lam);
}

}  // namespace bettimap::legendre
