#pragma once

#include <string>
#include <vector>

#include "bettimap/exact/ratfunc.hpp"
#include "bettimap/legendre/curve.hpp"

namespace bettimap::legendre {

// A section lambda -> (x(lambda), y(lambda)) with x rational in lambda. The
// branch of y is the one equal to sign * sqrt(y^2) (principal root) at the
// reference point and continued analytically along straight segments.
class Section {
 public:
  Section();  // the zero section O
  explicit Section(exact::RatFunc x, int sign = 1, exact::Rational ref_re = exact::Rational(1, 2),
                   exact::Rational ref_im = exact::Rational(0));

  static Section identity() { return Section(); }
  static Section parse(const std::string& x, int sign = 1);

  bool is_identity() const { return identity_; }
  const exact::RatFunc& x() const { return x_; }
  int sign() const { return sign_; }
  const exact::Rational& reference_re() const { return ref_re_; }
  const exact::Rational& reference_im() const { return ref_im_; }
  Complex reference() const;

  // y^2 as an element of Q(lambda); zero iff the section is 2-torsion.
  const exact::RatFunc& y_squared() const { return y2_; }
  bool is_two_torsion() const { return !identity_ && y2_.is_zero(); }

  Section negated() const;
  Section with_reference(const exact::Rational& re, const exact::Rational& im) const;

  // x(lambda) exactly at a rational parameter; throws at a pole.
  exact::Rational x_at(const exact::Rational& lambda) const { return x_.evaluate(lambda); }
  // True when (x, y) satisfies the curve equation at lambda (with y = +sqrt).
  bool defined_at(const exact::Rational& lambda) const;

  std::string describe() const;

 private:
  bool identity_ = true;
  exact::RatFunc x_;
  exact::RatFunc y2_;
  int sign_ = 1;
  exact::Rational ref_re_{1, 2}, ref_im_{0};
};

// Numeric view of a section at the current working precision: coefficients
// are converted once so repeated evaluation is cheap.
class NumericSection {
 public:
  explicit NumericSection(const Section& s);

  const Section& section() const { return section_; }
  bool is_identity() const { return section_.is_identity(); }
  bool two_torsion() const { return section_.is_two_torsion(); }

  Complex x(const Complex& lambda) const;
  void x_and_dx(const Complex& lambda, Complex& x, Complex& dx) const;
  Complex y_squared(const Complex& lambda) const;

  // y at the reference point (sign * principal root).
  Complex y_reference() const;
  // y continued along the segment [from, to] starting from y_from. Throws
  // "continuation failed" when the path runs into a zero or pole of y^2.
  Complex continue_y(const Complex& from, const Complex& y_from, const Complex& to) const;
  // y at lambda continued from the reference point.
  Complex y(const Complex& lambda) const;
  CurvePoint point(const Complex& lambda) const;

 private:
  Section section_;
  std::vector<Complex> num_, den_;
  Complex ref_;
};

}  // namespace bettimap::legendre
