#pragma once

#include <mpfr.h>
#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace bettimap::mp {

// Working precision (bits) of the calling thread. New values and the results
// of arithmetic are created at this precision.
long precision();
void set_precision(long bits);

// Extra bits carried above a requested precision. Tolerances are expressed in
// terms of target_bits() = precision() - kGuardBits.
inline constexpr long kGuardBits = 32;
long target_bits();

// Sets the thread's working precision for the lifetime of the scope.
class PrecisionScope {
 public:
  explicit PrecisionScope(long bits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  long saved_;
};

class Real {
 public:
  Real();
  Real(int v);
  Real(long v);
  Real(double v);
  explicit Real(const mpz_class& v);
  explicit Real(const mpq_class& v);
  explicit Real(std::string_view decimal);

  Real(const Real& o);
  Real(Real&& o) noexcept;
  Real& operator=(const Real& o);
  Real& operator=(Real&& o) noexcept;
  ~Real();

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  long bits() const { return mpfr_get_prec(v_); }

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);
  Real& operator+=(long o);
  Real& operator-=(long o);
  Real& operator*=(long o);
  Real& operator/=(long o);

  Real operator-() const;

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  // Binary exponent e with 0.5 <= |x| / 2^e < 1; very negative for zero.
  long exponent() const;

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
  mpz_class round_to_mpz() const;
  mpq_class to_mpq() const;
  // Decimal rendering with the given number of significant digits.
  std::string str(int digits = 20) const;

 private:
  mpfr_t v_;
};

Real operator+(const Real& a, const Real& b);
Real operator-(const Real& a, const Real& b);
Real operator*(const Real& a, const Real& b);
Real operator/(const Real& a, const Real& b);
Real operator+(const Real& a, long b);
Real operator-(const Real& a, long b);
Real operator*(const Real& a, long b);
Real operator/(const Real& a, long b);
Real operator+(long a, const Real& b);
Real operator-(long a, const Real& b);
Real operator*(long a, const Real& b);
Real operator/(long a, const Real& b);
inline Real operator+(const Real& a, int b) { return a + long(b); }
inline Real operator-(const Real& a, int b) { return a - long(b); }
inline Real operator*(const Real& a, int b) { return a * long(b); }
inline Real operator/(const Real& a, int b) { return a / long(b); }
inline Real operator+(int a, const Real& b) { return long(a) + b; }
inline Real operator-(int a, const Real& b) { return long(a) - b; }
inline Real operator*(int a, const Real& b) { return long(a) * b; }
inline Real operator/(int a, const Real& b) { return long(a) / b; }

bool operator==(const Real& a, const Real& b);
std::partial_ordering operator<=>(const Real& a, const Real& b);

Real abs(const Real& x);
Real sqrt(const Real& x);
Real cbrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real log2(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real sinh(const Real& x);
Real cosh(const Real& x);
Real atan2(const Real& y, const Real& x);
Real pow(const Real& x, const Real& y);
Real pow(const Real& x, long n);
Real hypot(const Real& x, const Real& y);
Real floor(const Real& x);
Real round(const Real& x);  // nearest integer, ties away from zero
Real ldexp(const Real& x, long e);
Real max(const Real& a, const Real& b);
Real min(const Real& a, const Real& b);

Real pi();
// 2^-bits, the default "unit" at a given precision.
Real two_pow(long e);

std::ostream& operator<<(std::ostream& os, const Real& x);

}  // namespace bettimap::mp
