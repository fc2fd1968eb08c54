#include "bettimap/legendre/section.hpp"

#include "bettimap/error.hpp"
#include "bettimap/exact/text.hpp"

namespace bettimap::legendre {

Section::Section() = default;

Section::Section(exact::RatFunc x, int sign, exact::Rational ref_re, exact::Rational ref_im)
    : identity_(false), x_(std::move(x)), sign_(sign >= 0 ? 1 : -1), ref_re_(ref_re), ref_im_(ref_im) {
  y2_ = curve_rhs(x_);
  ref_re_.canonicalize();
  ref_im_.canonicalize();
}

Section Section::parse(const std::string& x, int sign) { return Section(exact::parse_ratfunc(x), sign); }

Complex Section::reference() const { return Complex(Real(ref_re_), Real(ref_im_)); }

Section Section::negated() const {
  Section s = *this;
  s.sign_ = -s.sign_;
  return s;
}

Section Section::with_reference(const exact::Rational& re, const exact::Rational& im) const {
  Section s = *this;
  s.ref_re_ = re;
  s.ref_im_ = im;
  s.ref_re_.canonicalize();
  s.ref_im_.canonicalize();
  return s;
}

bool Section::defined_at(const exact::Rational& lambda) const {
  if (identity_) return true;
  return x_.den().evaluate(lambda) != 0;
}

std::string Section::describe() const {
  if (identity_) return "O";
  return "x = " + exact::to_string(x_, "l") + (sign_ > 0 ? ", sign = +1" : ", sign = -1");
}

NumericSection::NumericSection(const Section& s) : section_(s) {
  if (s.is_identity()) return;
  for (const auto& c : s.x().num().coeffs()) num_.emplace_back(Real(c));
  for (const auto& c : s.x().den().coeffs()) den_.emplace_back(Real(c));
  ref_ = s.reference();
}

namespace {
void horner2(const std::vector<Complex>& c, const Complex& t, Complex& v, Complex& d) {
  v = Complex();
  d = Complex();
  for (int k = int(c.size()) - 1; k >= 0; --k) {
    d = d * t + v;
    v = v * t + c[k];
  }
}
}  // namespace

Complex NumericSection::x(const Complex& lambda) const {
  if (is_identity()) throw DomainError("the zero section has no x coordinate");
  Complex n, d, dn, dd;
  horner2(num_, lambda, n, dn);
  horner2(den_, lambda, d, dd);
  return n / d;
}

void NumericSection::x_and_dx(const Complex& lambda, Complex& x, Complex& dx) const {
  if (is_identity()) throw DomainError("the zero section has no x coordinate");
  Complex n, d, dn, dd;
  horner2(num_, lambda, n, dn);
  horner2(den_, lambda, d, dd);
  x = n / d;
  dx = (dn * d - n * dd) / (d * d);
}

Complex NumericSection::y_squared(const Complex& lambda) const { return curve_rhs(x(lambda), lambda); }

Complex NumericSection::y_reference() const {
  if (two_torsion()) return Complex();
  Complex y2 = y_squared(ref_);
  if (!y2.re.is_finite() || !y2.im.is_finite() || mp::abs(y2) <= mp::two_pow(-mp::precision() / 2))
    throw DomainError("reference point is a zero or pole of y^2");
  Complex y = mp::sqrt(y2);
  return section_.sign() > 0 ? y : -y;
}

Complex NumericSection::continue_y(const Complex& from, const Complex& y_from, const Complex& to) const {
  if (two_torsion()) return Complex();
  Complex delta = to - from;
  if (delta.is_zero()) return y_from;
  Real t(0), dt(0.125);
  Real min_dt = mp::two_pow(-48);
  Complex y = y_from;
  Real floor_tol = mp::two_pow(-mp::precision() / 2);
  while (t < Real(1)) {
    Real step = mp::min(dt, Real(1) - t);
    Complex lam = from + delta * (t + step);
    Complex y2 = y_squared(lam);
    if (!y2.re.is_finite() || !y2.im.is_finite() || mp::abs(y2) <= floor_tol)
      throw NumericalError("continuation failed: path meets a zero or pole of y^2");
    Complex w = mp::sqrt(y2);
    Complex cand = mp::norm(w - y) <= mp::norm(w + y) ? w : -w;
    if (mp::abs(cand - y) > mp::abs(y) / 4) {
      dt = step / 2;
      if (dt < min_dt) throw NumericalError("continuation failed: branch point on the path");
      continue;
    }
    y = std::move(cand);
    t += step;
    if (dt < Real(0.125)) dt = dt * 2;
  }
  return y;
}

Complex NumericSection::y(const Complex& lambda) const {
  if (two_torsion()) return Complex();
  return continue_y(ref_, y_reference(), lambda);
}

CurvePoint NumericSection::point(const Complex& lambda) const {
  if (is_identity()) return CurvePoint::zero();
  CurvePoint p;
  p.x = x(lambda);
  p.y = y(lambda);
  return p;
}

}  // namespace bettimap::legendre
