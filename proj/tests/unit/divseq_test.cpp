#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <set>

#include "bettimap/divseq/divseq.hpp"
#include "bettimap/error.hpp"
#include "bettimap/exact/text.hpp"
#include "bettimap/mp/real.hpp"

using namespace bettimap;
using divseq::BaseDivisor;
using exact::RatPoly;
using legendre::Section;

namespace {

Section sec(const char* x, int sign = 1) { return Section::parse(x, sign); }
RatPoly poly(const char* s) { return exact::parse_ratpoly(s); }

std::set<std::string> support(const BaseDivisor& d) {
  std::set<std::string> s;
  for (const auto& p : d.entries) s.insert(exact::to_string(p.poly, "l"));
  return s;
}

}  // namespace

TEST(TorsionLocus, DoublingOfConstantSection) {
  auto d = divseq::torsion_locus(2, sec("2"));
  ASSERT_EQ(d.entries.size(), 1u);
  EXPECT_EQ(d.entries[0].poly, poly("l - 2"));
  EXPECT_EQ(d.entries[0].mult, 1);
  EXPECT_TRUE(d.excluded.empty());
}

TEST(TorsionLocus, FirstMultipleIsEmpty) {
  EXPECT_TRUE(divseq::torsion_locus(1, sec("2")).entries.empty());
  EXPECT_TRUE(divseq::torsion_locus(1, sec("l + 1")).entries.empty());
}

TEST(TorsionLocus, IdenticallyTorsionSectionRejected) {
  for (const char* x : {"0", "1", "l"}) {
    try {
      divseq::torsion_locus(2, sec(x));
      FAIL() << x;
    } catch (const DomainError& e) {
      EXPECT_NE(std::string(e.what()).find("Silverman hypothesis violated"), std::string::npos);
    }
    EXPECT_NO_THROW(divseq::torsion_locus(3, sec(x)));
  }
  EXPECT_THROW(divseq::torsion_locus(2, Section::identity()), DomainError);
}

TEST(TorsionLocus, DivisibilityOrdering) {
  for (const char* x : {"2", "l + 1", "3"}) {
    auto P = sec(x);
    for (int m = 1; m <= 4; ++m)
      for (int n = m; n <= 8; n += m)
        EXPECT_TRUE(divseq::divisor_leq(divseq::torsion_locus(m, P), divseq::torsion_locus(n, P)))
            << x << " m=" << m << " n=" << n;
  }
}

TEST(TorsionLocus, CoprimeSupportsDisjoint) {
  for (const char* x : {"2", "l + 1"}) {
    auto P = sec(x);
    for (int m = 2; m <= 6; ++m)
      for (int n = m + 1; n <= 7; ++n) {
        if (std::gcd(m, n) != 1) continue;
        auto a = support(divseq::torsion_locus(m, P));
        auto b = support(divseq::torsion_locus(n, P));
        for (const auto& s : a) EXPECT_EQ(b.count(s), 0u) << x << " m=" << m << " n=" << n << " " << s;
      }
  }
}

TEST(TorsionLocus, ConstantSectionIsReducedForSmallN) {
  auto P = sec("2");
  for (int n = 1; n <= 8; ++n) EXPECT_TRUE(divseq::is_reduced(divseq::torsion_locus(n, P))) << n;
}

TEST(TorsionLocus, DegreeMatchesTorsionPolynomial) {
  // Away from the ramified place the divisor is the root divisor of fhat_n.
  for (const char* x : {"2", "l + 1"}) {
    auto P = sec(x);
    for (int n = 3; n <= 7; n += 2) {
      auto d = divseq::torsion_locus(n, P);
      int deg = 0;
      for (const auto& p : d.entries) deg += p.mult * p.poly.degree();
      for (const auto& p : d.excluded) deg += p.mult * p.poly.degree();
      EXPECT_EQ(deg, divseq::torsion_polynomial(n, P).degree()) << x << " n=" << n;
    }
  }
}

TEST(Dnpq, DistinctConstantsNeverMeet) {
  auto d = divseq::dnpq_divisor(1, sec("2"), sec("3"));
  EXPECT_TRUE(d.entries.empty());
}

TEST(Dnpq, NegativeTargetGivesNextTorsionLocus) {
  for (const char* x : {"2", "l + 1"}) {
    auto P = sec(x);
    auto d = divseq::dnpq_divisor(2, P, P.negated());
    auto t = divseq::torsion_locus(3, P);
    EXPECT_EQ(d.json(), t.json()) << x;
  }
}

TEST(Dnpq, ZeroTargetIsTorsionLocus) {
  auto P = sec("2");
  EXPECT_EQ(divseq::dnpq_divisor(4, P, Section::identity()).json(), divseq::torsion_locus(4, P).json());
}

TEST(Dnpq, IdenticalSectionsAreAnError) {
  auto P = sec("2");
  EXPECT_THROW(divseq::dnpq_divisor(1, P, P), DomainError);
  auto d = divseq::dnpq_divisor(1, P, P.negated());
  EXPECT_EQ(d.json(), divseq::torsion_locus(2, P).json());
}

TEST(Dnpq, MeetingTwoTorsionSection) {
  // x = 2 and x = l cross at l = 2, where both are the point (2, 0).
  auto d = divseq::dnpq_divisor(1, sec("2"), sec("l"));
  ASSERT_EQ(d.entries.size(), 1u);
  EXPECT_EQ(d.entries[0].poly, poly("l - 2"));
  EXPECT_EQ(d.entries[0].mult, 1);
  EXPECT_FALSE(d.notes.empty());
}

TEST(Dnpq, SignSelectsBranch) {
  // x = 2 and x = 5 - l share an abscissa at l = 3; only one choice of the
  // y-branch of Q makes the points equal there.
  auto P = sec("2");
  auto plus = divseq::dnpq_divisor(1, P, sec("5 - l", 1));
  auto minus = divseq::dnpq_divisor(1, P, sec("5 - l", -1));
  auto a = support(plus), b = support(minus);
  EXPECT_EQ(a.size() + b.size(), 1u);
}

TEST(Progressions, SimpleProgressionWithException) {
  std::vector<long> raw = {2};
  for (long n = 3; n <= 30; n += 3) raw.push_back(n);
  auto ap = divseq::fit_progressions(raw, 30);
  ASSERT_EQ(ap.progressions.size(), 1u);
  EXPECT_EQ(ap.progressions[0], std::make_pair(3L, 3L));
  EXPECT_EQ(ap.exceptional, std::vector<long>{2});
}

TEST(Progressions, EmptyAndShort) {
  auto ap = divseq::fit_progressions({}, 20);
  EXPECT_TRUE(ap.progressions.empty());
  EXPECT_TRUE(ap.exceptional.empty());
  ap = divseq::fit_progressions({1, 3}, 3);
  EXPECT_TRUE(ap.progressions.empty());
  EXPECT_EQ(ap.exceptional, (std::vector<long>{1, 3}));
  ap = divseq::fit_progressions({1, 2, 5}, 20);
  EXPECT_TRUE(ap.progressions.empty());
  EXPECT_EQ(ap.exceptional, (std::vector<long>{1, 2, 5}));
}

TEST(Progressions, RandomStructuresReproduced) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    long N = 8 + long(rng() % 40);
    long m = 1 + long(rng() % std::max<long>(1, N / 4));
    std::set<long> raw;
    for (long r = 0; r < m; ++r) {
      if (rng() % 2) continue;
      long start = r == 0 ? m : r;
      start += m * long(rng() % 2);
      for (long n = start; n <= N; n += m) raw.insert(n);
    }
    for (int k = 0; k < 3; ++k) raw.insert(1 + long(rng() % (N / 2)));
    std::vector<long> v(raw.begin(), raw.end());
    auto ap = divseq::fit_progressions(v, N);
    for (long n = 1; n <= N; ++n) ASSERT_EQ(ap.contains(n), raw.count(n) == 1) << "trial " << trial << " n " << n;
    for (const auto& pr : ap.progressions) EXPECT_LE(pr.second, m);
    for (long e : ap.exceptional) EXPECT_LE(e, N / 2);
  }
}

TEST(Xi, ConstantPairStructure) {
  auto rep = divseq::xi_structure(sec("2"), sec("3"), 6);
  ASSERT_EQ(rep.divisors.size(), 6u);
  for (std::size_t i = 0; i < rep.divisors.size(); ++i) {
    bool in_raw = std::find(rep.raw.begin(), rep.raw.end(), long(i + 1)) != rep.raw.end();
    EXPECT_EQ(in_raw, !divseq::is_reduced(rep.divisors[i]));
  }
  for (long n = 1; n <= 6; ++n)
    EXPECT_EQ(rep.ap.contains(n), std::find(rep.raw.begin(), rep.raw.end(), n) != rep.raw.end());
}

TEST(Oracle, RootsAreMultipleRootsOfTorsionPolynomial) {
  mp::PrecisionScope scope(160);
  for (const char* x : {"2", "l + 1", "(l + 3)/2"}) {
    auto P = sec(x);
    Disc disc{0.5, 0.0, 10.0};
    for (int m = 2; m <= 6; ++m) {
      auto T = divseq::torsion_polynomial(m, P);
      auto roots = divseq::tangency_oracle_roots(m, P, disc);
      auto dT = T.derivative();
      for (const auto& r : roots) {
        mp::Real s = mp::max(mp::Real(1), mp::abs(r));
        mp::Real tol = mp::pow(s, long(T.degree())) * mp::two_pow(-40);
        EXPECT_LT(mp::abs(T.evaluate(r)), tol) << x << " m=" << m;
        EXPECT_LT(mp::abs(dT.evaluate(r)), tol) << x << " m=" << m;
      }
      bool squarefree = exact::is_squarefree(T);
      if (squarefree) EXPECT_TRUE(roots.empty());
    }
  }
}
