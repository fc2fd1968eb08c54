#include <gtest/gtest.h>

#include <random>

#include "bettimap/error.hpp"
#include "bettimap/exact/text.hpp"
#include "bettimap/heights/heights.hpp"
#include "bettimap/mp/real.hpp"
#include "bettimap/numeric/polyroots.hpp"

using namespace bettimap;
using heights::AlgebraicNumber;
using heights::Complex;
using heights::Real;
using exact::Rational;

namespace {

AlgebraicNumber alg(const char* poly, const Complex& approx) {
  return AlgebraicNumber{exact::parse_ratpoly(poly), approx};
}

Real tiny() { return mp::two_pow(-mp::target_bits() + 8); }

}  // namespace

TEST(RationalHeight, Values) {
  EXPECT_EQ(heights::rational_height_H(Rational(2, 3)), 3);
  EXPECT_EQ(heights::rational_height_H(Rational(0)), 1);
  EXPECT_EQ(heights::rational_height_H(Rational(7)), 7);
  EXPECT_EQ(heights::rational_height_H(Rational(-9, 4)), 9);
}

TEST(WeilHeight, Examples) {
  mp::PrecisionScope s(160);
  Real log2 = mp::log(Real(2));
  EXPECT_LE(mp::abs(heights::weil_height(AlgebraicNumber::rational(Rational(1, 2))) - log2), tiny());
  EXPECT_LE(mp::abs(heights::weil_height(alg("l^2 - 2", Complex(1.414))) - log2 / 2), tiny());
  EXPECT_LE(mp::abs(heights::weil_height(alg("l^2 + l + 1", Complex(-0.5, 0.866)))), tiny());
  EXPECT_LE(mp::abs(heights::weil_height(alg("l^3 - 2", Complex(1.26))) - log2 / 3), tiny());
  EXPECT_LE(mp::abs(heights::weil_height(alg("2*l^2 - 3", Complex(1.22))) - mp::log(Real(3)) / 2), tiny());
}

TEST(WeilHeight, ZeroExactlyOnRootsOfUnity) {
  // Cyclotomic polynomials and 0 have height zero; the others do not.
  for (const char* p : {"l", "l - 1", "l + 1", "l^2 + 1", "l^2 + l + 1", "l^2 - l + 1", "l^4 + 1",
                        "l^4 + l^3 + l^2 + l + 1", "l^4 - l^2 + 1", "l^6 + l^3 + 1"}) {
    mp::PrecisionScope s(128);
    auto poly = exact::parse_ratpoly(p);
    auto root = numeric::polynomial_roots(poly).front();
    EXPECT_LE(mp::abs(heights::weil_height(AlgebraicNumber{poly, root})), tiny()) << p;
  }
  mp::PrecisionScope s(128);
  for (const char* p : {"l - 2", "l^2 - l - 1", "l^3 - l - 1", "3*l^2 + 1", "l^2 + l + 2"})
  {
    auto poly = exact::parse_ratpoly(p);
    EXPECT_GT(heights::weil_height(AlgebraicNumber{poly, numeric::polynomial_roots(poly).back()}), tiny()) << p;
  }
}

TEST(WeilHeight, ConjugateInvariance) {
  mp::PrecisionScope s(128);
  auto h1 = heights::weil_height(alg("l^3 - 2", Complex(1.26)));
  auto h2 = heights::weil_height(alg("l^3 - 2", Complex(-0.63, 1.09)));
  auto h3 = heights::weil_height(alg("l^3 - 2", Complex(-0.63, -1.09)));
  EXPECT_EQ(h1.str(40), h2.str(40));
  EXPECT_EQ(h1.str(40), h3.str(40));
}

TEST(WeilHeight, RejectsReducibleAndAmbiguousInput) {
  mp::PrecisionScope s(128);
  EXPECT_THROW(heights::weil_height(alg("l^2 - 1", Complex(1))), DomainError);
  EXPECT_THROW(heights::weil_height(alg("l^2 - 2", Complex(0))), DomainError);
}

TEST(Recognize, FindsSmallAlgebraicNumbers) {
  mp::PrecisionScope s(192);
  Complex phi((Real(1) + mp::sqrt(Real(5))) / 2, Real(0));
  auto a = heights::recognize_algebraic(phi, 4);
  ASSERT_TRUE(a.has_value());
  EXPECT_EQ(a->minpoly, exact::parse_ratpoly("l^2 - l - 1"));
  auto b = heights::recognize_algebraic(Complex(Real(3) / 7, Real(0)), 4);
  ASSERT_TRUE(b.has_value());
  EXPECT_EQ(b->minpoly, exact::parse_ratpoly("l - 3/7"));
  Complex w(Real(1) / 2, mp::sqrt(Real(7)) / 2);  // root of l^2 - l + 2
  auto c = heights::recognize_algebraic(w, 4);
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->minpoly, exact::parse_ratpoly("l^2 - l + 2"));
  EXPECT_FALSE(heights::recognize_algebraic(Complex(mp::exp(Real(1)), mp::pi()), 3).has_value());
}

TEST(CanonicalHeight, TorsionPointsVanish) {
  mp::PrecisionScope s(128);
  for (const char* x : {"0", "1", "3"}) {
    auto c = heights::canonical_height(exact::parse_rational(x), Rational(3));
    EXPECT_TRUE(c.torsion);
    EXPECT_LE(c.value, c.tolerance + tiny()) << x;
  }
  // (2, y) on lambda = 4 doubles to (0, 0): order four.
  auto c = heights::canonical_height(Rational(2), Rational(4));
  EXPECT_TRUE(c.torsion);
  EXPECT_EQ(c.value, 0);
}

TEST(CanonicalHeight, ConstantSectionAtThree) {
  mp::PrecisionScope s(128);
  auto a = heights::canonical_height(Rational(2), Rational(3), 7);
  auto b = heights::canonical_height(Rational(2), Rational(3), 8);
  EXPECT_FALSE(a.torsion);
  EXPECT_GT(a.value, 0);
  EXPECT_LE(mp::abs(a.value - b.value), a.tolerance + b.tolerance);
  EXPECT_LT(mp::abs(a.value - b.value) / b.value, 1e-3);
  EXPECT_EQ(b.cauchy_gaps.size(), 8u);
}

TEST(CanonicalHeight, Quadraticity) {
  mp::PrecisionScope s(128);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 6; ++trial) {
    Rational x(long(rng() % 41) - 20, long(rng() % 9) + 1);
    Rational lam(long(rng() % 31) - 15, long(rng() % 5) + 1);
    x.canonicalize();
    lam.canonicalize();
    if (lam == 0 || lam == 1) continue;
    Rational y2 = x * (x - 1) * (x - lam);
    if (y2 == 0) continue;
    Rational t = x * x - lam;
    Rational x2 = t * t / (4 * y2);
    auto h1 = heights::canonical_height(x, lam, 6);
    auto h2 = heights::canonical_height(x2, lam, 6);
    Real gap = mp::abs(h2.value - h1.value * 4);
    EXPECT_LE(gap, h2.tolerance + h1.tolerance * 4 + tiny()) << x.get_str() << " " << lam.get_str();
  }
}

TEST(CanonicalHeight, BlowupIsReported) {
  mp::PrecisionScope s(128);
  try {
    heights::canonical_height(Rational(2), Rational(3), 12, 4000);
    FAIL();
  } catch (const NumericalError& e) {
    EXPECT_NE(std::string(e.what()).find("increase precision"), std::string::npos);
  }
}
