#include "bettimap/mp/complex.hpp"

#include <ostream>

namespace bettimap::mp {

Complex& Complex::operator+=(const Complex& o) {
  re += o.re;
  im += o.im;
  return *this;
}
Complex& Complex::operator-=(const Complex& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}
Complex& Complex::operator*=(const Complex& o) {
  Complex t;
  mul_into(t, *this, o);
  *this = std::move(t);
  return *this;
}
Complex& Complex::operator/=(const Complex& o) {
  *this = *this / o;
  return *this;
}
Complex& Complex::operator*=(const Real& o) {
  re *= o;
  im *= o;
  return *this;
}
Complex& Complex::operator/=(const Real& o) {
  re /= o;
  im /= o;
  return *this;
}
Complex& Complex::operator*=(long o) {
  re *= o;
  im *= o;
  return *this;
}
Complex& Complex::operator/=(long o) {
  re /= o;
  im /= o;
  return *this;
}

std::string Complex::str(int digits) const { return "(" + re.str(digits) + ", " + im.str(digits) + ")"; }

void mul_into(Complex& out, const Complex& a, const Complex& b) {
  mpfr_fmms(out.re.get(), a.re.get(), b.re.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  mpfr_fmma(out.im.get(), a.re.get(), b.im.get(), a.im.get(), b.re.get(), MPFR_RNDN);
}

void fma_into(Complex& acc, const Complex& a, const Complex& b) {
  thread_local Complex t;
  if (t.re.bits() != precision()) t = Complex();
  mul_into(t, a, b);
  acc.re += t.re;
  acc.im += t.im;
}

Complex operator+(const Complex& a, const Complex& b) { return Complex(a.re + b.re, a.im + b.im); }
Complex operator-(const Complex& a, const Complex& b) { return Complex(a.re - b.re, a.im - b.im); }
Complex operator*(const Complex& a, const Complex& b) {
  Complex r;
  mul_into(r, a, b);
  return r;
}
Complex operator/(const Complex& a, const Complex& b) {
  Real d = norm(b);
  Complex r;
  mpfr_fmma(r.re.get(), a.re.get(), b.re.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  mpfr_fmms(r.im.get(), a.im.get(), b.re.get(), a.re.get(), b.im.get(), MPFR_RNDN);
  r.re /= d;
  r.im /= d;
  return r;
}
Complex operator*(const Complex& a, const Real& b) { return Complex(a.re * b, a.im * b); }
Complex operator*(const Real& a, const Complex& b) { return Complex(b.re * a, b.im * a); }
Complex operator/(const Complex& a, const Real& b) { return Complex(a.re / b, a.im / b); }
Complex operator*(const Complex& a, long b) { return Complex(a.re * b, a.im * b); }
Complex operator*(long a, const Complex& b) { return Complex(b.re * a, b.im * a); }
Complex operator/(const Complex& a, long b) { return Complex(a.re / b, a.im / b); }
Complex operator+(const Complex& a, long b) { return Complex(a.re + b, a.im); }
Complex operator-(const Complex& a, long b) { return Complex(a.re - b, a.im); }
Complex operator-(long a, const Complex& b) { return Complex(a - b.re, -b.im); }

Complex conj(const Complex& z) { return Complex(z.re, -z.im); }

Real norm(const Complex& z) {
  Real r;
  mpfr_fmma(r.get(), z.re.get(), z.re.get(), z.im.get(), z.im.get(), MPFR_RNDN);
  return r;
}

Real abs(const Complex& z) { return hypot(z.re, z.im); }
Real arg(const Complex& z) { return atan2(z.im, z.re); }

Complex sqrt(const Complex& z) {
  if (z.is_zero()) return Complex();
  Real r = abs(z);
  if (z.re.sign() >= 0) {
    Real s = sqrt((r + z.re) / 2);
    return Complex(s, z.im / (2 * s));
  }
  Real t = sqrt((r - z.re) / 2);
  Real re = abs(z.im) / (2 * t);
  return Complex(std::move(re), z.im.sign() < 0 ? -t : t);
}

Complex exp(const Complex& z) {
  Real m = exp(z.re);
  Real s, c;
  mpfr_sin_cos(s.get(), c.get(), z.im.get(), MPFR_RNDN);
  return Complex(m * c, m * s);
}

Complex log(const Complex& z) { return Complex(log(abs(z)), arg(z)); }

Complex expi(const Real& t) {
  Real s, c;
  mpfr_sin_cos(s.get(), c.get(), t.get(), MPFR_RNDN);
  return Complex(std::move(c), std::move(s));
}

Complex pow(const Complex& z, long n) {
  if (n < 0) return Complex(1) / pow(z, -n);
  Complex result(1), base = z;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n) base *= base;
  }
  return result;
}

Complex mul_i(const Complex& z) { return Complex(-z.im, z.re); }

std::ostream& operator<<(std::ostream& os, const Complex& z) { return os << z.str(20); }

}  // namespace bettimap::mp
