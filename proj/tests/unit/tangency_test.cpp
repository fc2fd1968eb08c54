#include <gtest/gtest.h>

#include <chrono>
#include <optional>
#include <random>
#include <set>

#include "bettimap/error.hpp"
#include "bettimap/tangency/audit.hpp"
#include "bettimap/tangency/detector.hpp"
#include "bettimap/tangency/intlattice.hpp"
#include "bettimap/tangency/relations.hpp"
#include "lattice_oracle.hpp"

using namespace bettimap;
using tangency::Complex;
using tangency::IntMatrix;
using tangency::IntVector;
using tangency::Integer;
using tangency::Real;

namespace {

IntMatrix mat(std::initializer_list<std::initializer_list<long>> rows) {
  IntMatrix m;
  for (auto r : rows) {
    IntVector v;
    for (long e : r) v.push_back(Integer(e));
    m.push_back(v);
  }
  return m;
}

tangency::RelationLattice lattice(const IntMatrix& g) {
  tangency::RelationLattice L;
  L.generators = g;
  return L;
}

}  // namespace

TEST(IntLattice, HermiteAndSmith) {
  auto h = tangency::hermite_normal_form(mat({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}));
  ASSERT_EQ(h.size(), 3u);
  EXPECT_EQ(h[0], (IntVector{2, 4, 4}));  // echelon, pivots positive, reduced above
  for (std::size_t i = 0; i < h.size(); ++i)
    for (std::size_t k = 0; k < i; ++k) {
      std::size_t p = 0;
      while (h[i][p] == 0) ++p;
      EXPECT_GE(h[k][p], 0);
      EXPECT_LT(h[k][p], h[i][p]);
    }
  auto d = tangency::smith_invariants(mat({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}));
  EXPECT_EQ(d, (std::vector<Integer>{2, 6, 12}));
  EXPECT_EQ(tangency::rank(mat({{1, 2}, {2, 4}})), 1u);
  EXPECT_TRUE(tangency::smith_invariants(mat({{0, 0}})).empty());
}

TEST(IntLattice, LllFindsShortVector) {
  // Knapsack-style lattice hiding the relation 3*x1 - 2*x2 + x3 = 0.
  Integer W("1000000000000");
  IntMatrix rows = mat({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  long x[3] = {123457, 258827, 147283};  // 3*123457 - 2*258827 + 147283 = 0
  for (int i = 0; i < 3; ++i) rows[i].push_back(W * x[i]);
  auto red = tangency::lll_reduce(rows);
  bool found = false;
  for (const auto& r : red)
    if (r[3] == 0 && abs(r[0]) == 3 && abs(r[1]) == 2 && abs(r[2]) == 1) found = true;
  EXPECT_TRUE(found);
  EXPECT_THROW(tangency::lll_reduce(mat({{1, 2}, {2, 4}})), DomainError);
}

TEST(IntLattice, EnumerateBoxMatchesBruteForce) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> e(-4, 4);
  for (int trial = 0; trial < 30; ++trial) {
    IntMatrix g;
    int r = 1 + trial % 3;
    for (int i = 0; i < r; ++i) g.push_back(IntVector{e(rng), e(rng), e(rng)});
    auto h = tangency::hermite_normal_form(g);
    auto got = tangency::enumerate_box(h, 5);
    std::set<std::vector<long>> got_set;
    for (const auto& v : got) got_set.insert({v[0].get_si(), v[1].get_si(), v[2].get_si()});
    std::set<std::vector<long>> want;
    for (long a = -5; a <= 5; ++a)
      for (long b = -5; b <= 5; ++b)
        for (long c = -5; c <= 5; ++c)
          if (tangency::hnf_coordinates(h, IntVector{a, b, c})) want.insert({a, b, c});
    EXPECT_EQ(got_set, want);
  }
}

TEST(Saturation, Examples) {
  auto L = lattice(mat({{1, 0}, {0, 1}}));
  EXPECT_FALSE(tangency::saturation_check(L, lattice(mat({{2, 0}}))));
  EXPECT_TRUE(tangency::saturation_check(L, L));
  EXPECT_TRUE(tangency::saturation_check(L, lattice(mat({{1, 1}}))));
  auto L2 = lattice(mat({{2, 0}, {0, 2}}));
  EXPECT_THROW(tangency::saturation_check(L2, lattice(mat({{1, 0}}))), DomainError);
  EXPECT_TRUE(tangency::saturation_check(L2, lattice(mat({{2, 2}}))));
}

// Saturated iff no point of the box holding the fundamental parallelepiped of
// Lsing (in L-coordinates) lies in Q Lsing but not in Z Lsing.
TEST(Saturation, AgreesWithBruteForceOnRandom3d) {
  std::mt19937_64 rng(101);
  std::uniform_int_distribution<long> e(-3, 3);
  int sat = 0, unsat = 0;
  for (int trial = 0; trial < 100; ++trial) {
    IntMatrix base;
    do {
      base = IntMatrix();
      for (int i = 0; i < 3; ++i) base.push_back(IntVector{e(rng), e(rng), e(rng)});
    } while (tangency::rank(base) < 3);
    int r = 1 + int(rng() % 3);
    IntMatrix C;
    do {
      C = IntMatrix();
      for (int i = 0; i < r; ++i) C.push_back(IntVector{e(rng), e(rng), e(rng)});
    } while (tangency::rank(C) < std::size_t(r));
    IntMatrix sing;
    for (const auto& c : C) {
      IntVector v(3, Integer(0));
      for (int k = 0; k < 3; ++k)
        for (int j = 0; j < 3; ++j) v[j] += c[k] * base[k][j];
      sing.push_back(v);
    }
    bool got = tangency::saturation_check(lattice(base), lattice(sing));
    bool brute = testing_support::saturated_by_brute_force(C);
    EXPECT_EQ(got, brute) << trial;
    (got ? sat : unsat)++;
  }
  EXPECT_GT(sat, 5);
  EXPECT_GT(unsat, 5);
}

TEST(Relations, EnumerateHeadsCanonical) {
  auto h = tangency::enumerate_heads(2, 2);
  ASSERT_EQ(h.size(), 12u);
  EXPECT_EQ(h.front(), (std::vector<long>{0, 1}));
  EXPECT_EQ(h[1], (std::vector<long>{1, -1}));
  for (std::size_t i = 1; i < h.size(); ++i) EXPECT_TRUE(tangency::canonical_less(h[i - 1], h[i]));
  EXPECT_EQ(tangency::enumerate_heads(1, 3).size(), 3u);
}

TEST(Relations, SyntheticCandidates) {
  mp::PrecisionScope s(160);
  betti::ThetaPoint th;
  th.at = Complex(0.5);
  th.coords = {Real(2) / 5, Real(1) / 5, Real(0), Real(0)};
  auto c = tangency::relation_candidates(th, 5);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].a, (std::vector<long>{5, 2, 1}));
  th.coords = {Real(1) / 2, Real(1) / 2, Real(0), Real(0)};
  c = tangency::relation_candidates(th, 2);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].a, (std::vector<long>{2, 1, 1}));
  // Two sections with u2 = 3 u1 + 1/7 ... relation 3 P1 - P2 and its multiples.
  Real u1 = mp::sqrt(Real(2)) / 10, v1 = mp::sqrt(Real(3)) / 10;
  th.coords = {u1, v1, u1 * 3 + 1, v1 * 3 - 2, Real(0), Real(0), Real(0), Real(0)};
  c = tangency::relation_candidates(th, 6);
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[0].a, (std::vector<long>{3, -1, -1, 2}));
  EXPECT_EQ(c[1].a, (std::vector<long>{6, -2, -2, 4}));
  auto L = tangency::relation_lattice(th, tangency::RelationLattice::Kind::Full, 6);
  EXPECT_EQ(L.rank(), 1u);
}

TEST(Relations, GenericSectionHasNoSmallRelation) {
  mp::PrecisionScope s(160);
  betti::Pipeline pipe({legendre::Section::parse("2")}, Disc{0.5, 0.0, 0.2});
  std::mt19937_64 rng(2);
  for (Complex lam : {Complex(0.47, 0.03), Complex(0.61, -0.1)}) {
    auto th = betti::theta_map(pipe, lam);
    EXPECT_TRUE(tangency::relation_candidates(th, 100).empty());
  }
}

namespace {

// One section with z = q(lambda) (lambda - l0)^2 + (2 + i)/5 over the lattice Z + iZ.
tangency::FunctionModel double_zero_model(const Complex& l0) {
  tangency::FunctionModel m;
  m.periods = [](const Complex&, periods::PeriodBasis& b) {
    b.f = Complex(1);
    b.g = Complex(0, 1);
    b.df = b.dg = b.d2f = b.d2g = Complex(0);
  };
  m.logs.push_back([l0](const Complex& lam, Complex& z, Complex& dz, Complex& d2z) {
    Complex e = lam - l0;
    Complex q = lam + 1;
    z = q * e * e + Complex(Real(2) / 5, Real(1) / 5);
    dz = e * e + q * e * 2;
    d2z = e * 4 + q * 2;
  });
  return m;
}

}  // namespace

TEST(Detector, SyntheticDoubleZero) {
  mp::PrecisionScope s(160);
  Complex l0(Real(11) / 20, Real(1) / 50);
  tangency::FunctionLogSource src(double_zero_model(l0), Disc{0.5, 0.0, 0.2}, 160);
  tangency::RelationVector a;
  a.a = {5, 2, 1};
  Complex h, dh;
  tangency::tangency_residual(a, src.evaluate(l0), h, dh);
  EXPECT_LT(mp::abs(h), mp::two_pow(-150));
  EXPECT_LT(mp::abs(dh), mp::two_pow(-150));
  auto r = tangency::find_tangential_points({5}, src);
  ASSERT_EQ(r.hits.size(), 1u);
  EXPECT_LT(mp::abs(r.hits[0].lambda - l0), mp::two_pow(-100));
  EXPECT_TRUE(r.hits[0].multiplicity2);
  EXPECT_EQ(r.hits[0].a.a, (std::vector<long>{5, 2, 1}));
  // a = 1 is never tangential here, and a = 10 sees the same point.
  EXPECT_TRUE(tangency::find_tangential_points({1}, src).hits.empty());
  auto r10 = tangency::find_tangential_points({10}, src);
  ASSERT_EQ(r10.hits.size(), 1u);
  EXPECT_EQ(r10.hits[0].a.a, (std::vector<long>{10, 4, 2}));
}

TEST(Detector, SimpleZeroIsNotTangential) {
  mp::PrecisionScope s(160);
  tangency::FunctionModel m = double_zero_model(Complex(0.5));
  m.logs[0] = [](const Complex& lam, Complex& z, Complex& dz, Complex& d2z) {
    z = (lam - Complex(0.52, 0.01)) * 3 + Complex(Real(2) / 5, Real(1) / 5);
    dz = Complex(3);
    d2z = Complex(0);
  };
  tangency::FunctionLogSource src(m, Disc{0.5, 0.0, 0.2}, 160);
  EXPECT_TRUE(tangency::find_tangential_points({5}, src).hits.empty());
}

TEST(Detector, TorsionSectionSimpleTwoTorsionAtTwo) {
  mp::PrecisionScope s(160);
  // x = 2 is 2-torsion exactly at lambda = 2, to first order: no tangency.
  tangency::PipelineSource src({legendre::Section::parse("2")}, Disc{2.05, 0.05, 0.2}, 160);
  tangency::DetectorConfig cfg;
  cfg.grid = 16;
  auto r = tangency::find_tangential_points({2}, src, cfg);
  EXPECT_TRUE(r.hits.empty());
}

TEST(Scan, RefusesIdenticallyRelatedSections) {
  mp::PrecisionScope s(160);
  tangency::PipelineSource src({legendre::Section::parse("2"), legendre::Section::parse("2")},
                               Disc{0.5, 0.0, 0.2}, 160);
  tangency::DetectorConfig cfg;
  try {
    tangency::scan_D_a(src, 1, cfg);
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("section pair identically related"), std::string::npos);
  }
}

namespace {

tangency::FunctionModel offset_model(const Complex& l0, const Complex& c, int power) {
  tangency::FunctionModel m = double_zero_model(l0);
  m.logs[0] = [l0, c, power](const Complex& lam, Complex& z, Complex& dz, Complex& d2z) {
    Complex e = lam - l0;
    if (power == 2) {
      z = e * e + c;
      dz = e * 2;
      d2z = Complex(2);
    } else {
      z = e + c;
      dz = Complex(1);
      d2z = Complex(0);
    }
  };
  return m;
}

}  // namespace

TEST(Audit, BoundShapeForOneSection) {
  tangency::AuditConfig cfg;
  cfg.delta1 = 3;
  cfg.delta2 = 2;
  EXPECT_DOUBLE_EQ(tangency::generator_bound(cfg, 2, 0.5, 7.0, 1), 3 * 4 * 1.5 * 1.5);
  EXPECT_DOUBLE_EQ(tangency::generator_bound(cfg, 2, 0.5, 4.0, 3), 3 * 4 * std::pow(1.5, 6) * 4);
}

TEST(Audit, TorsionTangencyWithinDefaultBound) {
  mp::PrecisionScope s(160);
  Complex l0(Real(11) / 20, Real(1) / 50);
  tangency::FunctionLogSource src(offset_model(l0, Complex(Real(1) / 2, Real(1) / 2), 2), Disc{0.5, 0.0, 0.2}, 160);
  tangency::TangencyHit hit;
  hit.lambda = l0;
  hit.a.a = {2, 1, 1};
  auto r = tangency::small_generator_audit(hit, src, 1, std::log(2.0), 1.0);
  EXPECT_TRUE(r.applicable);
  EXPECT_EQ(r.rank_full, 1u);
  EXPECT_EQ(r.rank_singular, 1u);
  EXPECT_EQ(r.max_norm, 2);
  EXPECT_TRUE(r.satisfied);
  EXPECT_NE(r.json().find("\"satisfied\": true"), std::string::npos);
}

TEST(Audit, RankMismatchIsInapplicable) {
  mp::PrecisionScope s(160);
  Complex l0(Real(11) / 20, Real(1) / 50);
  tangency::FunctionLogSource src(offset_model(l0, Complex(Real(1) / 2, Real(1) / 2), 1), Disc{0.5, 0.0, 0.2}, 160);
  tangency::TangencyHit hit;
  hit.lambda = l0;
  hit.a.a = {2, 1, 1};
  auto r = tangency::small_generator_audit(hit, src, 1, std::log(2.0), 1.0);
  EXPECT_FALSE(r.applicable);
  EXPECT_EQ(r.note, "corollary inapplicable");
  EXPECT_EQ(r.rank_full, 1u);
  EXPECT_EQ(r.rank_singular, 0u);
}
