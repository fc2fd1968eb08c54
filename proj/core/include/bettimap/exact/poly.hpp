#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "bettimap/exact/rational.hpp"
#include "bettimap/mp/complex.hpp"

namespace bettimap::exact {

// Dense univariate polynomial over Q; c[k] is the coefficient of t^k and the
// top coefficient is nonzero (the zero polynomial has no coefficients).
class RatPoly {
 public:
  RatPoly() = default;
  RatPoly(const Rational& c);
  RatPoly(long c) : RatPoly(Rational(c)) {}
  explicit RatPoly(std::vector<Rational> coeffs);

  static RatPoly monomial(const Rational& c, int k);
  static RatPoly variable() { return monomial(1, 1); }

  int degree() const { return int(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const Rational& coeff(int k) const;
  const Rational& leading() const;
  const std::vector<Rational>& coeffs() const { return c_; }

  RatPoly& operator+=(const RatPoly& o);
  RatPoly& operator-=(const RatPoly& o);
  RatPoly& operator*=(const RatPoly& o);
  RatPoly& operator*=(const Rational& s);
  RatPoly operator-() const;

  Rational evaluate(const Rational& t) const;
  mp::Complex evaluate(const mp::Complex& t) const;
  // Value, first and second derivative at t.
  void evaluate3(const mp::Complex& t, mp::Complex& v, mp::Complex& d1, mp::Complex& d2) const;
  RatPoly derivative() const;
  RatPoly monic() const;
  RatPoly compose(const RatPoly& inner) const;

  friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<Rational> c_;
};

RatPoly operator+(RatPoly a, const RatPoly& b);
RatPoly operator-(RatPoly a, const RatPoly& b);
RatPoly operator*(const RatPoly& a, const RatPoly& b);
RatPoly operator*(RatPoly a, const Rational& s);
RatPoly operator*(const Rational& s, RatPoly a);
RatPoly pow(const RatPoly& p, int e);

// Euclidean division a = q*b + r with deg r < deg b. Throws on b == 0.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);
RatPoly operator/(const RatPoly& a, const RatPoly& b);  // exact quotient part
RatPoly operator%(const RatPoly& a, const RatPoly& b);
bool divides(const RatPoly& d, const RatPoly& p);

// Monic gcd via the subresultant remainder sequence over Z. gcd(0, 0) throws.
RatPoly gcd(const RatPoly& a, const RatPoly& b);

// Extended Euclid: returns (g, s, t) with s*a + t*b = g, g monic.
struct ExtGcd {
  RatPoly g, s, t;
};
ExtGcd extended_gcd(const RatPoly& a, const RatPoly& b);

// Yun's algorithm: p = lc * prod s_k^k with s_k monic, squarefree, pairwise
// coprime; only nonconstant s_k are returned, ordered by k.
struct SquarefreeFactor {
  RatPoly factor;
  int multiplicity;
};
std::vector<SquarefreeFactor> squarefree_decomposition(const RatPoly& p);
bool is_squarefree(const RatPoly& p);

// Complete factorisation over Q into monic irreducibles (Zassenhaus:
// factorisation modulo a prime, Hensel lifting, recombination). Factors are
// sorted by (degree, coefficients). Throws on the zero polynomial.
struct Factorization {
  Rational unit;
  std::vector<SquarefreeFactor> factors;
};
Factorization factor(const RatPoly& p);
bool is_irreducible(const RatPoly& p);

// Canonical order used wherever a deterministic listing is needed.
bool canonical_less(const RatPoly& a, const RatPoly& b);

// Integer vector proportional to p: coefficients coprime, positive leading.
std::vector<Integer> primitive_integer(const RatPoly& p);
RatPoly from_integer(const std::vector<Integer>& z);

std::string to_string(const RatPoly& p, const std::string& var = "t");
std::ostream& operator<<(std::ostream& os, const RatPoly& p);

}  // namespace bettimap::exact
