#include <gtest/gtest.h>

#include "bettimap/mp/complex.hpp"

using bettimap::mp::Complex;
using bettimap::mp::PrecisionScope;
using bettimap::mp::Real;

TEST(Real, PrecisionScopeRestores) {
  long before = bettimap::mp::precision();
  {
    PrecisionScope s(300);
    EXPECT_EQ(bettimap::mp::precision(), 300);
    Real x(1);
    EXPECT_EQ(x.bits(), 300);
  }
  EXPECT_EQ(bettimap::mp::precision(), before);
}

TEST(Real, ArithmeticAndConversions) {
  PrecisionScope s(128);
  Real a(mpq_class(1, 3));
  Real b = a * 3 - 1;
  EXPECT_LT(bettimap::mp::abs(b), bettimap::mp::two_pow(-120));
  EXPECT_EQ(Real(2.5).round_to_mpz(), 3);
  EXPECT_EQ(Real(mpq_class(3, 8)).to_mpq(), mpq_class(3, 8));
  Real moved = std::move(a);
  a = Real(7);
  EXPECT_EQ(a.to_long(), 7);
  EXPECT_GT(moved, Real(0));
}

TEST(Complex, PrincipalSqrtBranch) {
  PrecisionScope s(128);
  Complex m1(-1, 0);
  Complex r = bettimap::mp::sqrt(m1);
  EXPECT_NEAR(r.re.to_double(), 0.0, 1e-30);
  EXPECT_NEAR(r.im.to_double(), 1.0, 1e-30);
  Complex below(Real(-4), Real(-1e-30));
  EXPECT_LT(bettimap::mp::sqrt(below).im.to_double(), 0);
  for (double re : {-3.0, -0.5, 0.25, 2.0})
    for (double im : {-2.0, -0.1, 0.3, 1.5}) {
      Complex z(re, im);
      Complex w = bettimap::mp::sqrt(z);
      EXPECT_GE(w.re.to_double(), 0);
      EXPECT_LT(bettimap::mp::abs(w * w - z), bettimap::mp::two_pow(-120));
    }
}

TEST(Complex, ExpLogAndPowers) {
  PrecisionScope s(192);
  Complex z(0.3, -1.2);
  Complex back = bettimap::mp::log(bettimap::mp::exp(z));
  EXPECT_LT(bettimap::mp::abs(back - z), bettimap::mp::two_pow(-185));
  Complex p = bettimap::mp::pow(z, 5);
  Complex q = z * z * z * z * z;
  EXPECT_LT(bettimap::mp::abs(p - q), bettimap::mp::two_pow(-180));
  EXPECT_LT(bettimap::mp::abs(bettimap::mp::pow(z, -2) * z * z - Complex(1)), bettimap::mp::two_pow(-180));
}
