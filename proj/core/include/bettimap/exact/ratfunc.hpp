#pragma once

#include <string>

#include "bettimap/exact/poly.hpp"

namespace bettimap::exact {

// Element of Q(t) kept as num/den with gcd(num, den) = 1 and den monic.
class RatFunc {
 public:
  RatFunc() : num_(), den_(1) {}
  RatFunc(const Rational& c) : num_(c), den_(1) {}
  RatFunc(long c) : RatFunc(Rational(c)) {}
  RatFunc(const RatPoly& p) : num_(p), den_(1) {}
  RatFunc(const RatPoly& num, const RatPoly& den);

  const RatPoly& num() const { return num_; }
  const RatPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  bool is_constant() const { return is_polynomial() && num_.degree() <= 0; }

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  RatFunc operator-() const;

  Rational evaluate(const Rational& t) const;  // throws at a pole
  mp::Complex evaluate(const mp::Complex& t) const;
  // Value and derivative at t.
  void evaluate2(const mp::Complex& t, mp::Complex& v, mp::Complex& d) const;
  RatFunc derivative() const;

  // Order of vanishing at the place defined by an irreducible pi.
  int valuation(const RatPoly& pi) const;

  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

 private:
  RatPoly num_, den_;
};

RatFunc operator+(RatFunc a, const RatFunc& b);
RatFunc operator-(RatFunc a, const RatFunc& b);
RatFunc operator*(RatFunc a, const RatFunc& b);
RatFunc operator/(RatFunc a, const RatFunc& b);
RatFunc pow(const RatFunc& f, int e);

// Multiplicity of pi in p (pi nonconstant).
int valuation(const RatPoly& p, const RatPoly& pi);

std::string to_string(const RatFunc& f, const std::string& var = "t");

}  // namespace bettimap::exact
