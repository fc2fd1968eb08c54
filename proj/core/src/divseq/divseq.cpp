#include "bettimap/divseq/divseq.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "bettimap/error.hpp"
#include "bettimap/legendre/curve.hpp"
#include "bettimap/legendre/divpoly.hpp"
#include "bettimap/numeric/polyroots.hpp"

namespace bettimap::divseq {

using exact::RatFunc;
using mp::Real;
using exact::Rational;
using legendre::Section;

namespace {

const RatPoly& lam_poly() {
  static const RatPoly l = RatPoly::variable();
  return l;
}

bool is_bad_place(const RatPoly& pi) { return pi == lam_poly() || pi == lam_poly() - RatPoly(1); }

std::vector<RatPoly> irreducible_factors(const RatPoly& p) {
  std::vector<RatPoly> out;
  if (p.is_constant()) return out;
  for (const auto& f : exact::factor(p).factors) out.push_back(f.factor);
  return out;
}

// Ramification index of the double cover y^2 = F(X) over the place.
int ramification(const RatFunc& y2, const RatPoly& pi) {
  if (y2.is_zero()) return 1;
  return (y2.valuation(pi) % 2 != 0) ? 2 : 1;
}

void add_place(BaseDivisor& d, const RatPoly& pi, int mult) {
  if (mult <= 0) return;
  Place p{pi, mult};
  if (is_bad_place(pi)) d.excluded.push_back(p);
  else d.entries.push_back(p);
}

void canonicalize(BaseDivisor& d) {
  auto less = [](const Place& a, const Place& b) { return exact::canonical_less(a.poly, b.poly); };
  std::sort(d.entries.begin(), d.entries.end(), less);
  std::sort(d.excluded.begin(), d.excluded.end(), less);
}

std::vector<Complex> sorted_roots(const RatPoly& p) {
  auto r = numeric::polynomial_roots(p);
  std::sort(r.begin(), r.end(), [](const Complex& a, const Complex& b) {
    if (a.re != b.re) return a.re < b.re;
    return a.im < b.im;
  });
  return r;
}

// y of a section at lambda, continued from its reference point; tries a
// straight path first and then two doglegs through the upper and lower
// half-planes.
legendre::CurvePoint section_point(const Section& s, const Complex& lambda) {
  legendre::NumericSection ns(s);
  if (s.is_identity()) return legendre::CurvePoint::zero();
  legendre::CurvePoint p;
  p.x = ns.x(lambda);
  if (s.is_two_torsion()) return p;
  Complex ref = s.reference();
  std::vector<std::vector<Complex>> paths = {
      {ref, lambda}, {ref, ref + Complex(0.0, 0.75), lambda}, {ref, ref - Complex(0.0, 0.75), lambda}};
  for (const auto& path : paths) {
    try {
      Complex y = ns.y_reference();
      for (std::size_t k = 1; k < path.size(); ++k) y = ns.continue_y(path[k - 1], y, path[k]);
      p.y = y;
      return p;
    } catch (const NumericalError&) {
    }
  }
  throw NumericalError("could not continue y to lambda = " + lambda.str(10));
}

// Order of vanishing (in lambda) of the local parameter of nP - Q at rho,
// from |x(nP - Q)| at two radii along a few directions.
double numeric_order(int n, const Section& P, const Section& Q, const Complex& rho) {
  double best = 0;
  int count = 0;
  for (int k = 0; k < 3; ++k) {
    Complex dir = mp::expi(Real(0.7 + 2.1 * k));
    double r1 = 1e-6, r2 = 1e-9;
    double logs[2];
    bool ok = true;
    for (int j = 0; j < 2; ++j) {
      Complex lam = rho + dir * Real(j == 0 ? r1 : r2);
      try {
        auto a = legendre::mul(n, section_point(P, lam), lam);
        auto b = legendre::neg(section_point(Q, lam));
        auto d = legendre::add(a, b, lam);
        if (d.infinity) {
          ok = false;
          break;
        }
        logs[j] = std::log(mp::abs(d.x).to_double());
      } catch (const Error&) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    // |x| ~ |lambda - rho|^(-2k)  =>  k = (log|x(r2)| - log|x(r1)|) / (2 log(r1/r2))
    best += (logs[1] - logs[0]) / (2 * std::log(r1 / r2));
    ++count;
  }
  if (count == 0) throw NumericalError("numeric valuation failed at lambda = " + rho.str(10));
  return best / count;
}

}  // namespace

int BaseDivisor::multiplicity(const RatPoly& place) const {
  for (const auto& p : entries)
    if (p.poly == place) return p.mult;
  return 0;
}

std::string BaseDivisor::json() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) os << ", ";
    os << "{\"place\": \"" << exact::to_string(entries[i].poly, "l") << "\", \"mult\": " << entries[i].mult << '}';
  }
  os << ']';
  return os.str();
}

bool is_reduced(const BaseDivisor& d) {
  return std::all_of(d.entries.begin(), d.entries.end(), [](const Place& p) { return p.mult == 1; });
}

bool divisor_leq(const BaseDivisor& a, const BaseDivisor& b) {
  for (const auto& p : a.entries)
    if (b.multiplicity(p.poly) < p.mult) return false;
  return true;
}

BaseDivisor torsion_locus(int n, const Section& P) {
  if (n < 1) throw DomainError("torsion_locus: n must be positive");
  if (P.is_identity()) throw DomainError("Silverman hypothesis violated: P is the zero section");
  RatFunc xn;
  try {
    xn = legendre::x_of_multiple(n, P.x());
  } catch (const DomainError&) {
    throw DomainError("Silverman hypothesis violated: " + std::to_string(n) + "P = O identically");
  }
  BaseDivisor d;
  RatFunc y2 = P.y_squared();
  for (const auto& pi : irreducible_factors(xn.den())) {
    int v = xn.valuation(pi);
    int e = ramification(y2, pi);
    if ((-v * e) % 2 != 0) throw NumericalError("torsion_locus: odd pole order at an unramified place");
    add_place(d, pi, -v * e / 2);
  }
  canonicalize(d);
  return d;
}

BaseDivisor dnpq_divisor(int n, const Section& P, const Section& Q, long bits) {
  if (n < 1) throw DomainError("dnpq_divisor: n must be positive");
  if (Q.is_identity()) return torsion_locus(n, P);
  if (P.is_identity()) throw DomainError("Silverman hypothesis violated: P is the zero section");
  mp::PrecisionScope scope(2 * bits + mp::kGuardBits);
  BaseDivisor d;
  RatFunc xq = Q.x();
  RatFunc yq2 = Q.y_squared(), yp2 = P.y_squared();
  RatFunc xn;
  bool n_is_zero = false;
  try {
    xn = legendre::x_of_multiple(n, P.x());
  } catch (const DomainError&) {
    n_is_zero = true;
  }
  if (n_is_zero) {
    // nP = O identically: the divisor is where Q = O.
    for (const auto& pi : irreducible_factors(xq.den())) {
      int v = xq.valuation(pi);
      add_place(d, pi, -v * ramification(yq2, pi) / 2);
    }
    d.notes.push_back("nP = O identically; divisor taken as the pole locus of Q");
    canonicalize(d);
    return d;
  }
  if (xn == xq) {
    // nP = +-Q identically; compare y at a generic parameter.
    Complex probe(Real(3) / 7, Real(1) / 11);
    auto a = legendre::mul(n, section_point(P, probe), probe);
    auto b = section_point(Q, probe);
    if (mp::abs(a.y - b.y) <= mp::abs(a.y + b.y))
      throw DomainError("nP = Q holds identically for n = " + std::to_string(n));
    BaseDivisor t = torsion_locus(2 * n, P);
    t.notes.push_back("nP = -Q identically; divisor equals the 2n-torsion locus");
    return t;
  }
  RatFunc g = xn - xq;
  Real tol = mp::two_pow(-bits / 2);
  std::map<std::string, bool> seen;
  auto consider = [&](const RatPoly& pi, bool at_poles) {
    std::string key = exact::to_string(pi, "l");
    if (seen.count(key)) return;
    seen[key] = true;
    auto roots = sorted_roots(pi);
    int e = std::max(ramification(yp2, pi), ramification(yq2, pi));
    bool edge = at_poles || e == 2 || (!yq2.is_zero() && yq2.valuation(pi) > 0) || yq2.is_zero();
    if (!edge) {
      int matched = 0;
      for (const auto& rho : roots) {
        auto a = legendre::mul(n, section_point(P, rho), rho);
        auto b = section_point(Q, rho);
        Real scale = mp::max(Real(1), mp::abs(b.y));
        if (mp::abs(a.y - b.y) <= tol * scale) ++matched;
      }
      if (matched == 0) return;
      if (matched != int(roots.size()))
        d.notes.push_back("place " + key + ": y-signs agree at " + std::to_string(matched) + " of " +
                          std::to_string(roots.size()) + " conjugate roots (counted)");
      add_place(d, pi, g.valuation(pi));
      return;
    }
    // 2-torsion coincidence or common pole: local-parameter valuation.
    double ord = numeric_order(n, P, Q, roots.front());
    int mult = int(std::lround(ord * e));
    if (std::fabs(ord * e - mult) > 0.1)
      throw NumericalError("numeric valuation not integral at place " + key);
    if (mult > 0) {
      d.notes.push_back("place " + key + ": multiplicity from the local-parameter valuation");
      add_place(d, pi, mult);
    }
  };
  for (const auto& pi : irreducible_factors(g.num())) consider(pi, false);
  RatPoly common = exact::gcd(xn.den(), xq.den());
  for (const auto& pi : irreducible_factors(common)) consider(pi, true);
  canonicalize(d);
  return d;
}

bool APStructure::contains(long n) const {
  if (std::find(exceptional.begin(), exceptional.end(), n) != exceptional.end()) return true;
  for (const auto& [s, m] : progressions)
    if (n >= s && (n - s) % m == 0) return true;
  return false;
}

std::string APStructure::json() const {
  std::ostringstream os;
  os << "{\"exceptional\": [";
  for (std::size_t i = 0; i < exceptional.size(); ++i) os << (i ? ", " : "") << exceptional[i];
  os << "], \"progressions\": [";
  for (std::size_t i = 0; i < progressions.size(); ++i)
    os << (i ? ", " : "") << "{\"start\": " << progressions[i].first << ", \"modulus\": " << progressions[i].second
       << '}';
  os << "], \"n_max\": " << n_max << ", \"note\": \"conjectural beyond n_max\"}";
  return os.str();
}

APStructure fit_progressions(const std::vector<long>& raw_in, long N) {
  APStructure ap;
  ap.n_max = N;
  std::vector<long> raw;
  for (long n : raw_in)
    if (n >= 1 && n <= N) raw.push_back(n);
  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  auto in = [&](long n) { return std::binary_search(raw.begin(), raw.end(), n); };
  long lo = N / 2 + 1;
  bool tail_empty = std::none_of(raw.begin(), raw.end(), [&](long n) { return n >= lo; });
  if (N < 4 || tail_empty) {
    ap.exceptional = raw;
    return ap;
  }
  long modulus = 0;
  for (long m = 1; m <= N / 4 && modulus == 0; ++m) {
    bool periodic = true;
    for (long k = lo; k + m <= N && periodic; ++k)
      if (in(k) != in(k + m)) periodic = false;
    if (periodic) modulus = m;
  }
  if (modulus == 0) {
    ap.exceptional = raw;
    return ap;
  }
  std::vector<char> covered(N + 1, 0);
  for (long r = 0; r < modulus; ++r) {
    // Residue classes present in the tail, started as early as membership allows.
    long top = -1;
    for (long k = N; k >= lo; --k)
      if (k % modulus == r) {
        top = k;
        break;
      }
    if (top < 0 || !in(top)) continue;
    long start = top;
    while (start - modulus >= 1 && in(start - modulus)) start -= modulus;
    ap.progressions.emplace_back(start, modulus);
    for (long k = start; k <= N; k += modulus) covered[k] = 1;
  }
  std::sort(ap.progressions.begin(), ap.progressions.end());
  for (long n : raw)
    if (!covered[n]) ap.exceptional.push_back(n);
  return ap;
}

XiReport xi_structure(const Section& P, const Section& Q, long n_max, long bits) {
  if (n_max < 1) throw DomainError("xi_structure: n_max must be positive");
  XiReport rep;
  for (long n = 1; n <= n_max; ++n) {
    rep.divisors.push_back(dnpq_divisor(int(n), P, Q, bits));
    if (!is_reduced(rep.divisors.back())) rep.raw.push_back(n);
  }
  rep.ap = fit_progressions(rep.raw, n_max);
  return rep;
}

RatPoly torsion_polynomial(int m, const Section& P) {
  if (P.is_identity()) throw DomainError("Silverman hypothesis violated: P is the zero section");
  legendre::SectionDivisionSequence seq(P.x());
  RatPoly t = seq.fhat(std::abs(m));
  if (t.is_zero()) throw DomainError("Silverman hypothesis violated: " + std::to_string(m) + "P = O identically");
  return t;
}

std::vector<Complex> tangency_oracle_roots(int m, const Section& P, const Disc& disc) {
  RatPoly t = torsion_polynomial(m, P);
  std::vector<Complex> out;
  if (t.is_constant()) return out;
  RatPoly g = exact::gcd(t, t.derivative());
  // Drop the ramified (y = 0) and pole parameters of P.
  RatPoly bad = P.y_squared().num() * P.x().den();
  while (!g.is_constant()) {
    RatPoly c = exact::gcd(g, bad);
    if (c.is_constant()) break;
    g = g / c;
  }
  if (g.is_constant()) return out;
  for (const auto& f : irreducible_factors(g))
    for (const auto& r : sorted_roots(f))
      if (disc.contains(r)) out.push_back(r);
  std::sort(out.begin(), out.end(), [](const Complex& a, const Complex& b) {
    if (a.re != b.re) return a.re < b.re;
    return a.im < b.im;
  });
  return out;
}

}  // namespace bettimap::divseq
