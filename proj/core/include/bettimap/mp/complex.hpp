#pragma once

#include <iosfwd>
#include <string>

#include "bettimap/mp/real.hpp"

namespace bettimap::mp {

class Complex {
 public:
  Real re;
  Real im;

  Complex() = default;
  Complex(int r) : re(r), im(0) {}
  Complex(long r) : re(r), im(0) {}
  Complex(double r) : re(r), im(0) {}
  Complex(const Real& r) : re(r), im(0) {}
  Complex(Real&& r) : re(std::move(r)), im(0) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  Complex(double r, double i) : re(r), im(i) {}

  Complex& operator+=(const Complex& o);
  Complex& operator-=(const Complex& o);
  Complex& operator*=(const Complex& o);
  Complex& operator/=(const Complex& o);
  Complex& operator*=(const Real& o);
  Complex& operator/=(const Real& o);
  Complex& operator*=(long o);
  Complex& operator/=(long o);

  Complex operator-() const { return Complex(-re, -im); }

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  std::string str(int digits = 20) const;
};

Complex operator+(const Complex& a, const Complex& b);
Complex operator-(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Complex& b);
Complex operator/(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Real& b);
Complex operator*(const Real& a, const Complex& b);
Complex operator/(const Complex& a, const Real& b);
Complex operator*(const Complex& a, long b);
Complex operator*(long a, const Complex& b);
Complex operator/(const Complex& a, long b);
Complex operator+(const Complex& a, long b);
Complex operator-(const Complex& a, long b);
Complex operator-(long a, const Complex& b);
inline Complex operator*(const Complex& a, int b) { return a * long(b); }
inline Complex operator*(int a, const Complex& b) { return long(a) * b; }
inline Complex operator/(const Complex& a, int b) { return a / long(b); }
inline Complex operator+(const Complex& a, int b) { return a + long(b); }
inline Complex operator-(const Complex& a, int b) { return a - long(b); }
inline Complex operator-(int a, const Complex& b) { return long(a) - b; }

// acc += a * b without temporaries beyond two scratch values.
void fma_into(Complex& acc, const Complex& a, const Complex& b);
// out = a * b (out may alias neither a nor b).
void mul_into(Complex& out, const Complex& a, const Complex& b);

Complex conj(const Complex& z);
Real norm(const Complex& z);  // |z|^2
Real abs(const Complex& z);
Real arg(const Complex& z);
Complex sqrt(const Complex& z);  // principal branch, cut on the negative axis
Complex exp(const Complex& z);
Complex log(const Complex& z);
Complex expi(const Real& t);  // e^{it}
Complex pow(const Complex& z, long n);
Complex mul_i(const Complex& z);  // i*z

std::ostream& operator<<(std::ostream& os, const Complex& z);

}  // namespace bettimap::mp
