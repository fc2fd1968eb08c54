#include <gtest/gtest.h>

#include "bettimap/exact/text.hpp"
#include "bettimap/numeric/polyroots.hpp"

using namespace bettimap;

TEST(PolyRoots, ResidualsAndVieta) {
  mp::PrecisionScope s(160);
  exact::RatPoly p = exact::parse_ratpoly("t^7 - 3*t^5 + 1/2*t^2 - 11");
  auto roots = numeric::polynomial_roots(p);
  ASSERT_EQ(roots.size(), 7u);
  mp::Complex sum, prod(1);
  for (const auto& r : roots) {
    EXPECT_LT(mp::abs(p.evaluate(r)), mp::two_pow(-140));
    sum += r;
    prod *= r;
  }
  // Vieta: sum of roots = 0, product = 11 (degree odd, monic).
  EXPECT_LT(mp::abs(sum), mp::two_pow(-150));
  EXPECT_LT(mp::abs(prod - mp::Complex(11)), mp::two_pow(-140));
}

TEST(PolyRoots, RootsOfUnity) {
  mp::PrecisionScope s(128);
  auto roots = numeric::polynomial_roots(exact::parse_ratpoly("t^12 - 1"));
  for (const auto& r : roots) EXPECT_LT(mp::abs(mp::abs(r) - 1), mp::two_pow(-120));
}
