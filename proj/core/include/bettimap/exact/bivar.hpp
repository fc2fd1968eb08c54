#pragma once

#include <string>
#include <vector>

#include "bettimap/exact/ratfunc.hpp"

namespace bettimap::exact {

// Polynomial in x with coefficients in Q[t]: sum_i c_i(t) x^i.
class BivarPoly {
 public:
  BivarPoly() = default;
  BivarPoly(const RatPoly& c);
  BivarPoly(long c) : BivarPoly(RatPoly(c)) {}
  explicit BivarPoly(std::vector<RatPoly> coeffs);

  static BivarPoly x() { return BivarPoly(std::vector<RatPoly>{RatPoly(), RatPoly(1)}); }
  static BivarPoly t() { return BivarPoly(RatPoly::variable()); }

  int degree_x() const { return int(c_.size()) - 1; }
  int degree_t() const;
  bool is_zero() const { return c_.empty(); }
  const RatPoly& coeff(int i) const;
  const std::vector<RatPoly>& coeffs() const { return c_; }

  BivarPoly& operator+=(const BivarPoly& o);
  BivarPoly& operator-=(const BivarPoly& o);
  BivarPoly& operator*=(const BivarPoly& o);
  BivarPoly operator-() const;

  // Substitutes x = X(t); the result lies in Q(t). Computed by homogenising
  // X = p/q so only polynomial products are formed.
  RatFunc evaluate_at(const RatFunc& X) const;
  // Same, returning q^d * P(p/q, t) with d = degree_x() (a polynomial).
  RatPoly homogenized_at(const RatPoly& p, const RatPoly& q) const;
  mp::Complex evaluate(const mp::Complex& x, const mp::Complex& t) const;

  friend bool operator==(const BivarPoly& a, const BivarPoly& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<RatPoly> c_;
};

BivarPoly operator+(BivarPoly a, const BivarPoly& b);
BivarPoly operator-(BivarPoly a, const BivarPoly& b);
BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);
BivarPoly pow(const BivarPoly& p, int e);

// Determinant of the Sylvester matrix in x (formal degrees). Computed by
// evaluation at enough rational t and exact interpolation.
RatPoly resultant_x(const BivarPoly& p, const BivarPoly& q);
// Univariate resultant via the Sylvester determinant.
Rational resultant(const RatPoly& p, const RatPoly& q);

std::string to_string(const BivarPoly& p, const std::string& xvar = "x", const std::string& tvar = "l");

}  // namespace bettimap::exact
