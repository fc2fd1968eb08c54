#include "bettimap/betti/betti.hpp"

#include <sstream>

#include "bettimap/error.hpp"

namespace bettimap::betti {

namespace {

// Delta = f conj(g) - conj(f) g, checked against |f||g|.
Complex delta_of(const periods::PeriodBasis& b) {
  Complex d = b.f * mp::conj(b.g) - mp::conj(b.f) * b.g;
  if (mp::abs(d) <= mp::two_pow(-mp::target_bits() / 2) * mp::abs(b.f) * mp::abs(b.g))
    throw NumericalError("degenerate basis");
  return d;
}

Real certified(const Complex& w, const char* what) {
  Real tol = reality_tolerance() * mp::max(Real(1), mp::abs(w.re));
  if (mp::abs(w.im) > tol)
    throw NumericalError(std::string("reality certification failed for ") + what + ": |Im| = " + mp::abs(w.im).str(6));
  return w.re;
}

void solve(const Complex& w, const periods::PeriodBasis& b, const Complex& delta, Real& u, Real& v, const char* nu,
           const char* nv) {
  u = certified((w * mp::conj(b.g) - mp::conj(w) * b.g) / delta, nu);
  v = certified((mp::conj(w) * b.f - w * mp::conj(b.f)) / delta, nv);
}

}  // namespace

Real reality_tolerance() { return mp::two_pow(-mp::target_bits() / 2); }

void betti_coords(const Complex& z, const periods::PeriodBasis& basis, Real& u, Real& v) {
  solve(z, basis, delta_of(basis), u, v, "u", "v");
}

void betti_derivatives(const Complex& z, const Complex& dz, const periods::PeriodBasis& basis, Real& du, Real& dv) {
  Complex delta = delta_of(basis);
  Real u, v;
  solve(z, basis, delta, u, v, "u", "v");
  Complex w = dz - basis.df * u - basis.dg * v;
  solve(w, basis, delta, du, dv, "du", "dv");
}

BettiPair betti_pair(const Complex& z, const Complex& dz, const periods::PeriodBasis& basis) {
  BettiPair p;
  Complex delta = delta_of(basis);
  solve(z, basis, delta, p.u, p.v, "u", "v");
  Complex w = dz - basis.df * p.u - basis.dg * p.v;
  solve(w, basis, delta, p.du, p.dv, "du", "dv");
  return p;
}

ThetaPoint theta_map(const LocalData& local) {
  ThetaPoint t;
  t.at = local.lambda();
  std::size_t n = local.sections.size();
  t.coords.resize(4 * n);
  for (std::size_t j = 0; j < n; ++j) {
    BettiPair p = betti_pair(local.sections[j].z, local.sections[j].deriv.dz, local.basis);
    t.coords[2 * j] = p.u;
    t.coords[2 * j + 1] = p.v;
    t.coords[2 * n + 2 * j] = p.du;
    t.coords[2 * n + 2 * j + 1] = p.dv;
  }
  return t;
}

ThetaPoint theta_map(const Pipeline& pipeline, const Complex& lambda) {
  mp::PrecisionScope scope(pipeline.bits());
  return theta_map(pipeline.evaluate(lambda));
}

std::string theta_csv_header(std::size_t n) {
  std::ostringstream os;
  os << "lambda_re,lambda_im";
  for (std::size_t j = 1; j <= n; ++j) os << ",u" << j << ",v" << j;
  for (std::size_t j = 1; j <= n; ++j) os << ",du" << j << ",dv" << j;
  return os.str();
}

std::string theta_csv_row(const ThetaPoint& p, int digits) {
  std::ostringstream os;
  os << p.at.re.str(digits) << ',' << p.at.im.str(digits);
  for (const auto& c : p.coords) os << ',' << c.str(digits);
  return os.str();
}

}  // namespace bettimap::betti
