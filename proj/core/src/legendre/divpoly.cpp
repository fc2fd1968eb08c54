#include "bettimap/legendre/divpoly.hpp"

#include "bettimap/error.hpp"
#include "bettimap/legendre/curve.hpp"

namespace bettimap::legendre {

using exact::BivarPoly;
using exact::RatFunc;
using exact::RatPoly;
using exact::Rational;

namespace {

// Recurrences shared by the bivariate and the specialised sequence. `get`
// returns f_k for smaller indices, F is the curve right-hand side.
template <class T, class Get>
T recurrence(int n, const T& F, Get get) {
  if (n % 2 == 1) {
    int m = (n - 1) / 2;
    T a = get(m + 2) * get(m) * get(m) * get(m);
    T b = get(m - 1) * get(m + 1) * get(m + 1) * get(m + 1);
    T F2 = F * F * T(16);
    if (m % 2 == 0) return F2 * a - b;
    return a - F2 * b;
  }
  int m = n / 2;
  T inner = get(m + 2) * get(m - 1) * get(m - 1) - get(m - 2) * get(m + 1) * get(m + 1);
  return get(m) * inner;
}

}  // namespace

int division_poly_degree(int n) {
  n = std::abs(n);
  if (n == 0) return -1;
  if (n % 2 == 1) return (n * n - 1) / 2;
  return (n * n - 4) / 2;
}

DivisionPolySystem::DivisionPolySystem() {
  BivarPoly x = BivarPoly::x(), l = BivarPoly::t();
  F_ = x * (x - BivarPoly(1)) * (x - l);
  BivarPoly B = -(l + BivarPoly(1)), C = l;
  memo_[0] = BivarPoly();
  memo_[1] = BivarPoly(1);
  memo_[2] = BivarPoly(1);
  memo_[3] = BivarPoly(3) * pow(x, 4) + BivarPoly(4) * B * pow(x, 3) + BivarPoly(6) * C * pow(x, 2) - C * C;
  memo_[4] = BivarPoly(2) * pow(x, 6) + BivarPoly(4) * B * pow(x, 5) + BivarPoly(10) * C * pow(x, 4) -
             BivarPoly(10) * C * C * pow(x, 2) - BivarPoly(4) * B * C * C * x - BivarPoly(2) * C * C * C;
}

const BivarPoly& DivisionPolySystem::f(int n) {
  if (n < 0) {
    auto it = memo_.find(n);
    if (it != memo_.end()) return it->second;
    BivarPoly neg = -f(-n);
    return memo_[n] = neg;
  }
  auto it = memo_.find(n);
  if (it != memo_.end()) return it->second;
  BivarPoly v = recurrence<BivarPoly>(n, F_, [this](int k) { return f(k); });
  return memo_[n] = std::move(v);
}

BivarPoly DivisionPolySystem::psi_squared(int n) {
  const BivarPoly& fn = f(n);
  if (n % 2 == 0) return BivarPoly(4) * F_ * fn * fn;
  return fn * fn;
}

BivarPoly division_poly(int n) {
  DivisionPolySystem s;
  return s.f(n);
}

SectionDivisionSequence::SectionDivisionSequence(const RatFunc& X) : X_(X) {
  const RatPoly& p = X.num();
  const RatPoly& q = X.den();
  RatPoly l = RatPoly::variable();
  Fh_ = p * (p - q) * (p - l * q);
  RatPoly B = -(l + RatPoly(1)), C = l;
  RatPoly q2 = q * q, q3 = q2 * q, q4 = q2 * q2;
  RatPoly p2 = p * p, p3 = p2 * p, p4 = p2 * p2;
  memo_[0] = RatPoly();
  memo_[1] = RatPoly(1);
  memo_[2] = RatPoly(1);
  memo_[3] = RatPoly(3) * p4 + RatPoly(4) * B * p3 * q + RatPoly(6) * C * p2 * q2 - C * C * q4;
  memo_[4] = RatPoly(2) * p4 * p2 + RatPoly(4) * B * p4 * p * q + RatPoly(10) * C * p4 * q2 -
             RatPoly(10) * C * C * p2 * q4 - RatPoly(4) * B * C * C * p * q4 * q - RatPoly(2) * C * C * C * q4 * q2;
}

const RatPoly& SectionDivisionSequence::fhat(int n) {
  if (n < 0) {
    auto it = memo_.find(n);
    if (it != memo_.end()) return it->second;
    RatPoly neg = -fhat(-n);
    return memo_[n] = neg;
  }
  auto it = memo_.find(n);
  if (it != memo_.end()) return it->second;
  RatPoly v = recurrence<RatPoly>(n, Fh_, [this](int k) { return fhat(k); });
  return memo_[n] = std::move(v);
}

RatFunc SectionDivisionSequence::f_at(int n) {
  int d = division_poly_degree(n);
  if (d < 0) return RatFunc();
  return RatFunc(fhat(n), pow(X_.den(), d));
}

RatFunc x_of_multiple(int n, SectionDivisionSequence& seq) {
  n = std::abs(n);
  const RatPoly& p = seq.X().num();
  const RatPoly& q = seq.X().den();
  const RatPoly& Fh = seq.Fhat();
  if (n == 0) throw DomainError("multiple is identically infinity");
  if (n == 1) return seq.X();
  RatPoly fn = seq.fhat(n);
  RatPoly fm = seq.fhat(n - 1), fp = seq.fhat(n + 1);
  if (n % 2 == 1) {
    RatPoly den = q * fn * fn;
    if (den.is_zero()) throw DomainError("multiple is identically infinity");
    return RatFunc(p * fn * fn - RatPoly(4) * Fh * fm * fp, den);
  }
  RatPoly den = RatPoly(4) * q * Fh * fn * fn;
  if (den.is_zero()) throw DomainError("multiple is identically infinity");
  return RatFunc(RatPoly(4) * p * Fh * fn * fn - fm * fp, den);
}

RatFunc x_of_multiple(int n, const RatFunc& X) {
  SectionDivisionSequence seq(X);
  return x_of_multiple(n, seq);
}

}  // namespace bettimap::legendre
