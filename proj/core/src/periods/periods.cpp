#include "bettimap/periods/periods.hpp"

#include <cmath>

#include "bettimap/error.hpp"

namespace bettimap::periods {

namespace {

Real singular_distance(const Complex& lambda) { return mp::min(mp::abs(lambda), mp::abs(lambda - 1)); }

// Number of Taylor terms so that ratio^terms < 2^-(bits + 24).
int terms_for_ratio(double ratio) {
  double per_term = -std::log2(ratio);
  return int(std::ceil((mp::precision() + 24) / per_term)) + 8;
}

void horner3(const std::vector<Complex>& c, const Complex& t, Complex& v, Complex& d1, Complex& d2) {
  v = Complex();
  d1 = Complex();
  d2 = Complex();
  for (int k = int(c.size()) - 1; k >= 0; --k) {
    d2 = d2 * t + d1 * 2;
    d1 = d1 * t + v;
    v *= t;
    v += c[k];
  }
}

void horner2(const std::vector<Complex>& c, const Complex& t, Complex& v, Complex& d1) {
  v = Complex();
  d1 = Complex();
  Complex tmp;
  for (int k = int(c.size()) - 1; k >= 0; --k) {
    mp::mul_into(tmp, d1, t);
    d1 = tmp + v;
    mp::mul_into(tmp, v, t);
    v = tmp + c[k];
  }
}

Complex horner1(const std::vector<Complex>& c, const Complex& t) {
  Complex v, tmp;
  for (int k = int(c.size()) - 1; k >= 0; --k) {
    mp::mul_into(tmp, v, t);
    v = tmp + c[k];
  }
  return v;
}

Complex second_from_ode(const Complex& lambda, const Complex& w, const Complex& dw) {
  // lambda(1-lambda) w'' = w/4 - (1 - 2 lambda) w'
  return (w / 4 - (1 - 2 * lambda) * dw) / (lambda * (1 - lambda));
}

void hyp_series(const Complex& lambda, Complex& F, Complex& dF) {
  mp::PrecisionScope scope(mp::precision() + 16);
  Real tol = mp::two_pow(-(mp::precision() + 4));
  Complex term(1);   // a_k lambda^k
  Complex dterm(0);  // k a_k lambda^(k-1)
  Complex pw(1);     // lambda^(k-1) for the derivative
  Real a(1);         // a_k
  F = Complex(1);
  dF = Complex(0);
  for (long k = 0; k < 100000; ++k) {
    // a_{k+1} = a_k (k + 1/2)^2 / (k + 1)^2
    a *= (2 * k + 1) * (2 * k + 1);
    a /= 4 * (k + 1) * (k + 1);
    dterm = pw * a * (k + 1);
    pw *= lambda;
    term = pw * a;
    F += term;
    dF += dterm;
    if (k > 4 && mp::abs(term) < tol && mp::abs(dterm) < tol) break;
  }
}

}  // namespace

Complex ode_residual(const Complex& lambda, const Complex& w, const Complex& dw, const Complex& d2w) {
  return lambda * (1 - lambda) * d2w + (1 - 2 * lambda) * dw - w / 4;
}

std::vector<Complex> taylor_coefficients(const Complex& c, const Complex& w0, const Complex& w1, int terms) {
  std::vector<Complex> out(std::max(terms, 2));
  out[0] = w0;
  out[1] = w1;
  Complex a = c * (1 - c);
  Complex inv_a = Complex(1) / a;
  Complex b = 1 - 2 * c;
  Complex tmp;
  for (int k = 0; k + 2 < int(out.size()); ++k) {
    long s = (2L * k + 1) * (2L * k + 1);
    mp::mul_into(tmp, b, out[k + 1]);
    Complex num = out[k] * s / 4 - tmp * ((k + 1L) * (k + 1L));
    mp::mul_into(out[k + 2], num, inv_a);
    out[k + 2] /= (k + 1L) * (k + 2L);
  }
  return out;
}

void transport(const Complex& from, const Complex& to, Complex& w, Complex& dw) {
  Complex pos = from;
  Real floor = mp::two_pow(-24);
  int guard = 0;
  while (!(pos.re == to.re && pos.im == to.im)) {
    if (++guard > 100000) throw NumericalError("continuation failed: too many steps");
    Real rho = singular_distance(pos);
    if (rho < floor) throw NumericalError("continuation failed: path too close to a singular fibre");
    Complex delta = to - pos;
    Real len = mp::abs(delta);
    Complex next;
    Real ratio;
    if (len <= rho / 2) {
      next = to;
      ratio = len / rho;
    } else {
      next = pos + delta * (rho / 2 / len);
      ratio = Real(0.5);
    }
    // Guard against the end point itself being (nearly) singular.
    if (singular_distance(next) < floor) throw NumericalError("continuation failed: end point at a singular fibre");
    double r = std::max(ratio.to_double(), 1e-6);
    auto coeffs = taylor_coefficients(pos, w, dw, terms_for_ratio(r));
    Complex v, d;
    horner2(coeffs, next - pos, v, d);
    w = std::move(v);
    dw = std::move(d);
    pos = std::move(next);
  }
}

void hyp_f2(const Complex& lambda, Complex& F, Complex& dF) {
  Real tol = mp::two_pow(-mp::precision() + 4);
  if (mp::abs(lambda - 1) <= tol) throw DomainError("hyp_f: lambda = 1 is outside the domain");
  if (mp::abs(lambda) <= Real(0.75)) {
    hyp_series(lambda, F, dF);
    return;
  }
  if (lambda.im.is_zero() && lambda.re > Real(1)) throw DomainError("hyp_f: lambda lies on the branch cut [1, inf)");
  // Radial continuation from the circle |lambda| = 0.6 stays inside the
  // slit plane and away from lambda = 0.
  mp::PrecisionScope scope(mp::precision() + 24);
  Complex start = lambda * (Real(0.6) / mp::abs(lambda));
  Complex w, dw;
  hyp_series(start, w, dw);
  transport(start, lambda, w, dw);
  F = w;
  dF = dw;
}

Complex hyp_f(const Complex& lambda) {
  Complex F, dF;
  hyp_f2(lambda, F, dF);
  return F;
}

Complex PeriodBasis::dg_from_wronskian(const Complex& k) const {
  Complex W = k / (lambda * lambda - lambda);
  return (W + g * df) / f;
}

Complex PeriodBasis::wronskian_constant() const { return (f * dg - g * df) * (lambda * lambda - lambda); }

PeriodBasis period_basis_along(const std::vector<Complex>& path) {
  if (path.empty()) throw DomainError("period basis: empty path");
  const Complex& ref = path.front();
  if (mp::abs(ref) > Real(0.75) || mp::abs(1 - ref) > Real(0.75))
    throw DomainError("reference point must satisfy |lambda| <= 3/4 and |1 - lambda| <= 3/4");
  PeriodBasis b;
  b.path = path;
  Real pi = mp::pi();
  Complex F, dF, G, dG;
  hyp_series(ref, F, dF);
  hyp_series(1 - ref, G, dG);
  Complex f = F * pi, df = dF * pi;
  Complex ipi(Real(0), pi);
  Complex g = G * ipi, dg = -(dG * ipi);
  for (size_t i = 1; i < path.size(); ++i) {
    transport(path[i - 1], path[i], f, df);
    transport(path[i - 1], path[i], g, dg);
  }
  b.lambda = path.back();
  b.f = f;
  b.df = df;
  b.g = g;
  b.dg = dg;
  b.d2f = second_from_ode(b.lambda, f, df);
  b.d2g = second_from_ode(b.lambda, g, dg);
  return b;
}

PeriodBasis period_basis_at(const Complex& lambda, const Complex& reference) {
  return period_basis_along({reference, lambda});
}

Monodromy monodromy(const std::vector<Complex>& loop) {
  if (loop.size() < 3) throw DomainError("monodromy: loop needs at least three vertices");
  mp::PrecisionScope scope(mp::precision() + 16);
  PeriodBasis b0 = period_basis_along({loop.front()});
  PeriodBasis b1 = period_basis_along(loop);
  Complex delta = b0.f * mp::conj(b0.g) - mp::conj(b0.f) * b0.g;
  auto coords = [&](const Complex& z, Real& u, Real& v) {
    u = ((z * mp::conj(b0.g) - mp::conj(z) * b0.g) / delta).re;
    v = ((mp::conj(z) * b0.f - z * mp::conj(b0.f)) / delta).re;
  };
  Monodromy m;
  Real u, v, defect(0);
  coords(b1.f, u, v);
  m.m[0] = {mp::round(u).to_long(), mp::round(v).to_long()};
  defect = mp::max(mp::abs(u - mp::round(u)), mp::abs(v - mp::round(v)));
  coords(b1.g, u, v);
  m.m[1] = {mp::round(u).to_long(), mp::round(v).to_long()};
  defect = mp::max(defect, mp::max(mp::abs(u - mp::round(u)), mp::abs(v - mp::round(v))));
  m.defect = defect;
  return m;
}

PeriodField::PeriodField(const Disc& disc, const Complex& reference) : disc_(disc), bits_(mp::precision()) {
  std::string why = disc.validate();
  if (!why.empty()) throw DomainError(why);
  center_ = disc.center();
  path_ = {reference};
  if (!(reference.re == center_.re && reference.im == center_.im)) path_.push_back(center_);
  PeriodBasis b = period_basis_along(path_);
  double rho = disc.singular_distance();
  double jr = std::min(0.75 * rho, std::max(1.02 * disc.radius, 1e-3));
  jet_radius_ = Real(jr);
  int terms = terms_for_ratio(jr / rho);
  fc_ = taylor_coefficients(center_, b.f, b.df, terms);
  gc_ = taylor_coefficients(center_, b.g, b.dg, terms);
  k_ = b.wronskian_constant();
}

PeriodBasis PeriodField::evaluate(const Complex& lambda) const {
  mp::PrecisionScope scope(bits_);
  PeriodBasis b;
  b.lambda = lambda;
  b.path = path_;
  Complex t = lambda - center_;
  if (mp::abs(t) <= jet_radius_) {
    horner3(fc_, t, b.f, b.df, b.d2f);
    horner3(gc_, t, b.g, b.dg, b.d2g);
  } else {
    Complex f = fc_[0], df = fc_[1], g = gc_[0], dg = gc_[1];
    transport(center_, lambda, f, df);
    transport(center_, lambda, g, dg);
    b.f = f;
    b.df = df;
    b.g = g;
    b.dg = dg;
    b.d2f = second_from_ode(lambda, f, df);
    b.d2g = second_from_ode(lambda, g, dg);
  }
  b.path.push_back(lambda);
  return b;
}

void local_values(const PeriodBasis& at, const Complex& h, Complex& f, Complex& g) {
  double rho = singular_distance(at.lambda).to_double();
  double ratio = std::max(mp::abs(h).to_double() / rho, 1e-300);
  if (ratio > 0.5) throw DomainError("local_values: offset too large for the local expansion");
  int terms = int(std::ceil((mp::precision() + 16) / -std::log2(ratio))) + 2;
  terms = std::max(terms, 4);
  f = horner1(taylor_coefficients(at.lambda, at.f, at.df, terms), h);
  g = horner1(taylor_coefficients(at.lambda, at.g, at.dg, terms), h);
}

void PeriodField::nearby(const PeriodBasis& at, const Complex& h, Complex& f, Complex& g) const {
  mp::PrecisionScope scope(bits_);
  local_values(at, h, f, g);
}

}  // namespace bettimap::periods
