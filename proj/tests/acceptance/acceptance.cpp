// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bettimap/betti/betti.hpp"
#include "bettimap/betti/pipeline.hpp"
#include "bettimap/divseq/divseq.hpp"
#include "bettimap/ellog/elliptic_log.hpp"
#include "bettimap/ellog/weierstrass.hpp"
#include "bettimap/error.hpp"
#include "bettimap/heights/heights.hpp"
#include "bettimap/legendre/curve.hpp"
#include "bettimap/mp/real.hpp"
#include "bettimap/periods/periods.hpp"
#include "bettimap/tangency/detector.hpp"
#include "bettimap/tangency/intlattice.hpp"
#include "bettimap/tangency/relations.hpp"
#include "bettimap/tangency/source.hpp"
#include "lattice_oracle.hpp"
#include "test_random.hpp"

using namespace bettimap;
using mp::Complex;
using mp::Real;
using testing_support::random_complex;
using testing_support::random_in_disc;

namespace {

constexpr long kBits = 128;
const Disc kDisc{0.5, 0.0, 0.2};

struct Verdict {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;
double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::string sci(const Real& x) { return x.str(3); }

void require(Verdict& v, bool ok, const std::string& what) {
  if (!ok) {
    v.pass = false;
    v.detail += (v.detail.empty() ? "" : "; ") + what;
  }
}

Real rel(const Complex& a, const Complex& b) { return mp::abs(a - b) / mp::max(Real(1), mp::abs(b)); }

// 1. Periods: ODE, Wronskian constancy and dg from the Wronskian.
Verdict period_stack() {
  auto t0 = Clock::now();
  mp::PrecisionScope scope(kBits + mp::kGuardBits);
  Verdict v;
  Real tol = mp::two_pow(-64);
  periods::PeriodField field(kDisc);
  std::mt19937_64 rng(1001);
  Real ode = 0, wr = 0, dg = 0;
  Complex k0;
  for (int i = 0; i < 50; ++i) {
    Complex lam = random_in_disc(rng, kDisc);
    auto b = field.evaluate(lam);
    ode = mp::max(ode, mp::abs(periods::ode_residual(lam, b.f, b.df, b.d2f)) / mp::max(Real(1), mp::abs(b.f)));
    ode = mp::max(ode, mp::abs(periods::ode_residual(lam, b.g, b.dg, b.d2g)) / mp::max(Real(1), mp::abs(b.g)));
    Complex k = b.wronskian_constant();
    if (i == 0) k0 = k;
    wr = mp::max(wr, mp::abs(k - k0) / mp::abs(k0));
    dg = mp::max(dg, rel(b.dg_from_wronskian(k0), b.dg));
  }
  double secs = since(t0);
  require(v, ode <= tol, "ODE residual " + sci(ode));
  require(v, wr <= tol, "Wronskian drift " + sci(wr));
  require(v, dg <= tol, "dg reconstruction " + sci(dg));
  require(v, secs < 10, "runtime " + std::to_string(secs) + " s");
  std::ostringstream os;
  os << "ode " << sci(ode) << ", wronskian " << sci(wr) << ", dg " << sci(dg) << ", " << secs << " s";
  if (v.pass) v.detail = os.str();
  return v;
}

// 2. wp of the log gives back x, and logs add modulo the lattice.
Verdict log_consistency() {
  mp::PrecisionScope scope(kBits + mp::kGuardBits);
  Verdict v;
  Real tol = mp::two_pow(-64);
  std::mt19937_64 rng(2002);
  Real worst = 0, worst_add = 0;
  for (int i = 0; i < 20; ++i) {
    Complex lam = random_in_disc(rng, kDisc);
    auto b = periods::period_basis_at(lam);
    Complex x = random_complex(rng, -4, 4);
    Complex y = mp::sqrt(legendre::curve_rhs(x, lam));
    if (i % 2) y = -y;
    auto lg = ellog::elliptic_log(legendre::CurvePoint{x, y, false}, lam, b);
    ellog::WeierstrassLattice L(b.f, b.g);
    worst = mp::max(worst, mp::abs(L.wp(lg.z) - (x - (lam + 1) / 3)));
  }
  for (int i = 0; i < 10; ++i) {
    Complex lam = random_in_disc(rng, kDisc);
    auto b = periods::period_basis_at(lam);
    ellog::WeierstrassLattice L(b.f, b.g);
    auto point = [&](const Complex& x) {
      return legendre::CurvePoint{x, mp::sqrt(legendre::curve_rhs(x, lam)), false};
    };
    auto P = point(random_complex(rng, -3, 3));
    auto Q = point(random_complex(rng, -3, 3));
    Complex d = ellog::elliptic_log(P, lam, b).z + ellog::elliptic_log(Q, lam, b).z -
                ellog::elliptic_log(legendre::add(P, Q, lam), lam, b).z;
    Real a, c;
    L.coordinates(d, a, c);
    worst_add = mp::max(worst_add, mp::max(mp::abs(a - mp::round(a)), mp::abs(c - mp::round(c))));
  }
  require(v, worst <= tol, "wp identity " + sci(worst));
  require(v, worst_add <= tol, "additivity " + sci(worst_add));
  if (v.pass) v.detail = "wp identity " + sci(worst) + ", additivity " + sci(worst_add);
  return v;
}

// 3. Betti coordinates: reconstruction, derivative identity, reality and
// constancy on 2-torsion sections.
Verdict betti_stack() {
  mp::PrecisionScope scope(kBits + mp::kGuardBits);
  Verdict v;
  Real tol = mp::two_pow(-64);
  std::vector<legendre::Section> secs = {legendre::Section::parse("2"), legendre::Section::parse("3"),
                                         legendre::Section::parse("l + 1"), legendre::Section::parse("0"),
                                         legendre::Section::parse("1"), legendre::Section::parse("l")};
  betti::Pipeline pipe(secs, kDisc);
  std::mt19937_64 rng(3003);
  Real recon = 0, deriv = 0, imag = 0, torsion = 0;
  for (int i = 0; i < 20; ++i) {
    Complex lam = random_in_disc(rng, kDisc);
    auto ld = pipe.evaluate(lam);
    auto th = betti::theta_map(ld);
    const auto& b = ld.basis;
    Complex delta = b.f * mp::conj(b.g) - mp::conj(b.f) * b.g;
    for (std::size_t j = 0; j < secs.size(); ++j) {
      const auto& s = ld.sections[j];
      Complex u(th.u(j), Real(0)), w(th.v(j), Real(0)), du(th.du(j), Real(0)), dw(th.dv(j), Real(0));
      Real scale = mp::max(Real(1), mp::abs(s.z));
      recon = mp::max(recon, mp::abs(s.z - u * b.f - w * b.g) / scale);
      Real dscale = mp::max(Real(1), mp::abs(s.deriv.dz));
      deriv = mp::max(deriv, mp::abs(s.deriv.dz - u * b.df - w * b.dg - du * b.f - dw * b.g) / dscale);
      // The same quantities as complex numbers, before taking real parts.
      Complex uc = (s.z * mp::conj(b.g) - mp::conj(s.z) * b.g) / delta;
      Complex vc = (mp::conj(s.z) * b.f - s.z * mp::conj(b.f)) / delta;
      Complex r = s.deriv.dz - uc * b.df - vc * b.dg;
      Complex duc = (r * mp::conj(b.g) - mp::conj(r) * b.g) / delta;
      Complex dvc = (mp::conj(r) * b.f - r * mp::conj(b.f)) / delta;
      for (const Complex* c : {&uc, &vc, &duc, &dvc}) imag = mp::max(imag, mp::abs(c->im));
      if (secs[j].is_two_torsion()) torsion = mp::max(torsion, mp::max(mp::abs(th.du(j)), mp::abs(th.dv(j))));
    }
  }
  require(v, recon <= tol, "reconstruction " + sci(recon));
  require(v, deriv <= tol, "derivative identity " + sci(deriv));
  require(v, imag <= tol, "imaginary parts " + sci(imag));
  require(v, torsion <= tol, "torsion (du, dv) " + sci(torsion));
  if (v.pass)
    v.detail = "reconstruction " + sci(recon) + ", derivative " + sci(deriv) + ", imaginary " + sci(imag) +
               ", torsion " + sci(torsion);
  return v;
}

// 4. Analytic tangential points for a = (m) against multiple roots of the
// exact torsion polynomials.
Verdict oracle_equivalence() {
  auto t0 = Clock::now();
  mp::PrecisionScope scope(kBits + mp::kGuardBits);
  Verdict v;
  // The third section has a double 3-torsion place at l = 125/189 inside the
  // disc, so the comparison is not vacuous.
  std::vector<std::string> names = {"2", "l + 1", "25/21 - 3/10*(l - 125/189)"};
  Real radius(1e-10);
  int hits_total = 0, roots_total = 0, matched = 0;
  for (const auto& name : names) {
    auto P = legendre::Section::parse(name);
    tangency::PipelineSource src({P}, kDisc, kBits + mp::kGuardBits);
    tangency::SeedGrid grid(src, 32, 1);
    auto ver = src.at_precision(2 * kBits + mp::kGuardBits);
    tangency::DetectorConfig cfg;
    for (long m = 2; m <= 6; ++m) {
      auto found = tangency::find_tangential_points({m}, src, grid, ver.get(), cfg).hits;
      auto roots = divseq::tangency_oracle_roots(int(m), P, kDisc);
      hits_total += int(found.size());
      roots_total += int(roots.size());
      std::vector<bool> used(found.size(), false);
      for (const auto& r : roots) {
        bool ok = false;
        for (std::size_t k = 0; k < found.size(); ++k)
          if (!used[k] && mp::abs(found[k].lambda - r) <= radius) {
            used[k] = ok = true;
            break;
          }
        if (ok) ++matched;
        else require(v, false, "x = " + name + ", m = " + std::to_string(m) + ": missed root " + r.str(12));
      }
      for (std::size_t k = 0; k < found.size(); ++k)
        if (!used[k])
          require(v, false, "x = " + name + ", m = " + std::to_string(m) + ": false positive at " +
                                found[k].lambda.str(12));
    }
  }
  double secs = since(t0);
  require(v, secs < 300, "runtime " + std::to_string(secs) + " s");
  if (v.pass)
    v.detail = std::to_string(hits_total) + " analytic hits, " + std::to_string(roots_total) + " oracle roots, " +
               std::to_string(matched) + " matched, " + std::to_string(secs) + " s";
  return v;
}

struct ScanRun {
  tangency::ScanResult result;
  std::string csv;
};

ScanRun scan_paper_pair(long bits, int threads) {
  std::vector<legendre::Section> secs = {legendre::Section::parse("2"), legendre::Section::parse("3")};
  mp::PrecisionScope scope(bits + mp::kGuardBits);
  tangency::PipelineSource src(secs, kDisc, bits + mp::kGuardBits);
  tangency::DetectorConfig cfg;
  cfg.threads = threads;
  ScanRun r;
  r.result = tangency::scan_D_a(src, 20, cfg);
  r.csv = tangency::scan_csv(r.result, int(kBits * 0.30103));
  return r;
}

// Runs shared by criteria 5 and 9.
struct PaperScans {
  ScanRun a, b, hi, threaded;
  std::string error;
};

PaperScans& paper_scans() {
  static PaperScans s = [] {
    PaperScans p;
    try {
      p.a = scan_paper_pair(kBits, 1);
      p.b = scan_paper_pair(kBits, 1);
      p.hi = scan_paper_pair(2 * kBits, 1);
      p.threaded = scan_paper_pair(kBits, 8);
    } catch (const std::exception& e) {
      p.error = e.what();
    }
    return p;
  }();
  return s;
}

// 5. Finite, precision-stable hit list for (x = 2, x = 3), T = 20.
Verdict finiteness() {
  Verdict v;
  auto& s = paper_scans();
  if (!s.error.empty()) {
    require(v, false, s.error);
    return v;
  }
  const auto& lo = s.a.result;
  const auto& hi = s.hi.result;
  require(v, lo.failures.empty() && hi.failures.empty(), "per-relation failures in the scan");
  require(v, lo.hits.size() == hi.hits.size(),
          "hit count " + std::to_string(lo.hits.size()) + " vs " + std::to_string(hi.hits.size()) + " at doubled precision");
  if (lo.hits.size() == hi.hits.size()) {
    mp::PrecisionScope scope(2 * kBits + mp::kGuardBits);
    for (std::size_t k = 0; k < lo.hits.size(); ++k) {
      require(v, lo.hits[k].a.a == hi.hits[k].a.a, "relation mismatch at hit " + std::to_string(k));
      require(v, mp::abs(lo.hits[k].lambda - hi.hits[k].lambda) <= Real(1e-20),
              "lambda moved at hit " + std::to_string(k));
    }
  }
  bool monotone = true;
  for (std::size_t k = 1; k < lo.counts.size(); ++k) monotone = monotone && lo.counts[k] >= lo.counts[k - 1];
  require(v, monotone, "count table decreases");
  require(v, !lo.counts.empty() && lo.counts == s.b.result.counts, "count tables differ between runs");
  if (v.pass)
    v.detail = std::to_string(lo.hits.size()) + " hits, final count " + std::to_string(lo.counts.back()) + ", " +
               std::to_string(lo.grid_nodes) + " seeds";
  return v;
}

// 6. Saturation against box enumeration.
Verdict lattice_algebra() {
  Verdict v;
  std::mt19937_64 rng(6006);
  std::uniform_int_distribution<long> e(-3, 3);
  int agree = 0, sat = 0;
  for (int trial = 0; trial < 100; ++trial) {
    tangency::IntMatrix base, C, sing;
    do {
      base.clear();
      for (int i = 0; i < 3; ++i) base.push_back({e(rng), e(rng), e(rng)});
    } while (tangency::rank(base) < 3);
    int r = 1 + int(rng() % 3);
    do {
      C.clear();
      for (int i = 0; i < r; ++i) C.push_back({e(rng), e(rng), e(rng)});
    } while (tangency::rank(C) < std::size_t(r));
    for (const auto& c : C) {
      tangency::IntVector w(3, exact::Integer(0));
      for (int k = 0; k < 3; ++k)
        for (int j = 0; j < 3; ++j) w[j] += c[k] * base[k][j];
      sing.push_back(w);
    }
    tangency::RelationLattice L, Ls;
    L.generators = base;
    Ls.generators = sing;
    bool got = tangency::saturation_check(L, Ls);
    bool brute = testing_support::saturated_by_brute_force(C);
    if (got == brute) ++agree;
    else require(v, false, "pair " + std::to_string(trial) + " disagrees");
    sat += got;
  }
  if (v.pass) v.detail = std::to_string(agree) + "/100 agree (" + std::to_string(sat) + " saturated)";
  return v;
}

// 7. Torsion loci of x = 2 for n <= 12.
Verdict divisibility_sequences() {
  Verdict v;
  auto P = legendre::Section::parse("2");
  std::vector<divseq::BaseDivisor> D(13);
  for (int n = 1; n <= 12; ++n) D[n] = divseq::torsion_locus(n, P);
  int pairs = 0;
  for (int m = 1; m <= 12; ++m)
    for (int n = m; n <= 12; n += m) {
      ++pairs;
      require(v, divseq::divisor_leq(D[m], D[n]), "D_" + std::to_string(m) + " not <= D_" + std::to_string(n));
    }
  require(v, D[2].json() == "[{\"place\": \"-2 + l\", \"mult\": 1}]", "D_2 = " + D[2].json());
  auto rep = divseq::xi_structure(P, legendre::Section::identity(), 12);
  for (long n = 1; n <= 12; ++n) {
    bool raw = std::find(rep.raw.begin(), rep.raw.end(), n) != rep.raw.end();
    require(v, rep.ap.contains(n) == raw, "progressions disagree with raw at n = " + std::to_string(n));
  }
  if (v.pass)
    v.detail = std::to_string(pairs) + " divisibility pairs, D_2 = " + D[2].json() + ", Xi raw size " +
               std::to_string(rep.raw.size());
  return v;
}

// 8. Heights.
Verdict heights_check() {
  mp::PrecisionScope scope(kBits + mp::kGuardBits);
  Verdict v;
  Real h = heights::weil_height(heights::AlgebraicNumber::rational(exact::Rational(1, 2)));
  Real err = mp::abs(h - mp::log(Real(2)));
  require(v, err <= mp::two_pow(-kBits), "h(1/2) - log 2 = " + sci(err));
  auto h1 = heights::canonical_height(exact::Rational(2), exact::Rational(3));
  // x(2P) for x = 2 at lambda = 3: (4 - 3)^2 / (4 * 2 * 1 * (2 - 3)) = -1/8.
  auto h2 = heights::canonical_height(exact::Rational(-1, 8), exact::Rational(3));
  Real gap = mp::abs(h2.value - h1.value * 4);
  Real allowed = h2.tolerance + h1.tolerance * 4;
  require(v, gap <= allowed, "quadraticity gap " + sci(gap) + " > " + sci(allowed));
  require(v, h1.value > allowed, "height of x = 2 not positive");
  Real tors = 0;
  for (auto [x, l] : {std::pair<long, long>{0, 3}, {1, 3}, {3, 3}, {2, 4}}) {
    auto c = heights::canonical_height(exact::Rational(x), exact::Rational(l));
    require(v, c.value <= c.tolerance, "torsion point x = " + std::to_string(x) + " has height " + sci(c.value));
    tors = mp::max(tors, c.value);
  }
  if (v.pass)
    v.detail = "h(1/2) error " + sci(err) + ", hhat(P) " + h1.value.str(8) + ", quadraticity gap " + sci(gap) +
               " <= " + sci(allowed) + ", torsion max " + sci(tors);
  return v;
}

// 9. Thread count does not change the scan output.
Verdict determinism() {
  Verdict v;
  auto& s = paper_scans();
  if (!s.error.empty()) {
    require(v, false, s.error);
    return v;
  }
  require(v, s.a.csv == s.threaded.csv, "CSV differs between 1 and 8 threads");
  require(v, s.a.csv == s.b.csv, "CSV differs between two single-thread runs");
  if (v.pass) v.detail = "CSV identical (" + std::to_string(s.a.csv.size()) + " bytes)";
  return v;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Verdict()> run;
  };
  std::vector<Criterion> all = {
      {1, "period stack", period_stack},         {2, "log and wp consistency", log_consistency},
      {3, "Betti stack", betti_stack},           {4, "oracle equivalence", oracle_equivalence},
      {5, "finiteness and stability", finiteness}, {6, "lattice algebra", lattice_algebra},
      {7, "divisibility sequences", divisibility_sequences}, {8, "heights", heights_check},
      {9, "determinism", determinism},
  };
  int failed = 0;
  for (const auto& c : all) {
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail = std::string("exception: ") + e.what();
    }
    failed += !v.pass;
    std::printf("criterion %d (%s): %s: %s\n", c.id, c.name, v.pass ? "PASS" : "FAIL", v.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", int(all.size()) - failed, all.size());
  return failed == 0 ? 0 : 1;
}
