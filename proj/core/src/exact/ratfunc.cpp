#include "bettimap/exact/ratfunc.hpp"

#include "bettimap/error.hpp"

namespace bettimap::exact {

RatFunc::RatFunc(const RatPoly& num, const RatPoly& den) {
  if (den.is_zero()) throw DomainError("rational function with zero denominator");
  if (num.is_zero()) {
    num_ = RatPoly();
    den_ = RatPoly(1);
    return;
  }
  RatPoly g = gcd(num, den);
  num_ = num / g;
  den_ = den / g;
  Rational inv = 1 / den_.leading();
  num_ *= inv;
  den_ *= inv;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (den_ == o.den_) *this = RatFunc(num_ + o.num_, den_);
  else *this = RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) {
  if (den_ == o.den_) *this = RatFunc(num_ - o.num_, den_);
  else *this = RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
  return *this;
}

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  *this = RatFunc(num_ * o.num_, den_ * o.den_);
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
  if (o.is_zero()) throw DomainError("division by the zero rational function");
  *this = RatFunc(num_ * o.den_, den_ * o.num_);
  return *this;
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational RatFunc::evaluate(const Rational& t) const {
  Rational d = den_.evaluate(t);
  if (d == 0) throw DomainError("rational function evaluated at a pole");
  return num_.evaluate(t) / d;
}

mp::Complex RatFunc::evaluate(const mp::Complex& t) const { return num_.evaluate(t) / den_.evaluate(t); }

void RatFunc::evaluate2(const mp::Complex& t, mp::Complex& v, mp::Complex& d) const {
  mp::Complex n0, n1, n2, d0, d1, d2;
  num_.evaluate3(t, n0, n1, n2);
  den_.evaluate3(t, d0, d1, d2);
  v = n0 / d0;
  d = (n1 * d0 - n0 * d1) / (d0 * d0);
}

RatFunc RatFunc::derivative() const {
  return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

int RatFunc::valuation(const RatPoly& pi) const {
  if (num_.is_zero()) throw DomainError("valuation of zero");
  return exact::valuation(num_, pi) - exact::valuation(den_, pi);
}

RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }

RatFunc pow(const RatFunc& f, int e) {
  if (e < 0) return RatFunc(1) / pow(f, -e);
  return RatFunc(pow(f.num(), e), pow(f.den(), e));
}

int valuation(const RatPoly& p, const RatPoly& pi) {
  if (pi.degree() < 1) throw DomainError("valuation needs a nonconstant place");
  if (p.is_zero()) throw DomainError("valuation of zero");
  int v = 0;
  RatPoly cur = p;
  for (;;) {
    auto [q, r] = divmod(cur, pi);
    if (!r.is_zero()) return v;
    cur = std::move(q);
    ++v;
  }
}

std::string to_string(const RatFunc& f, const std::string& var) {
  if (f.is_polynomial()) return to_string(f.num(), var);
  return "(" + to_string(f.num(), var) + ")/(" + to_string(f.den(), var) + ")";
}

}  // namespace bettimap::exact
