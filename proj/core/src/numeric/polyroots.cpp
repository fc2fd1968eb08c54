#include "bettimap/numeric/polyroots.hpp"

#include <cmath>
#include <complex>

#include "bettimap/error.hpp"

namespace bettimap::numeric {

using mp::Complex;
using mp::Real;

namespace {

using cld = std::complex<long double>;

// Rough roots in long double; coefficients are scaled to avoid overflow.
std::vector<cld> seed_roots(const std::vector<Complex>& c) {
  int n = int(c.size()) - 1;
  // Normalise by the leading coefficient using the MPFR values, then convert.
  std::vector<cld> a(n + 1);
  Complex lead = c[n];
  for (int k = 0; k <= n; ++k) {
    Complex q = c[k] / lead;
    a[k] = cld(mpfr_get_ld(q.re.get(), MPFR_RNDN), mpfr_get_ld(q.im.get(), MPFR_RNDN));
  }
  long double R = 0;
  for (int k = 0; k < n; ++k) R = std::max(R, std::pow(std::abs(a[k]), 1.0L / (n - k)));
  R = std::max(2 * R, 1e-3L);
  std::vector<cld> z(n);
  for (int k = 0; k < n; ++k) z[k] = std::polar(R, 2 * M_PIl * k / n + 0.4L);
  for (int it = 0; it < 800; ++it) {
    long double worst = 0;
    for (int k = 0; k < n; ++k) {
      cld p = a[n], dp = 0;
      for (int j = n - 1; j >= 0; --j) {
        dp = dp * z[k] + p;
        p = p * z[k] + a[j];
      }
      if (p == cld(0)) continue;
      cld w = p / dp;
      cld s = 0;
      for (int j = 0; j < n; ++j)
        if (j != k) s += 1.0L / (z[k] - z[j]);
      cld corr = w / (1.0L - w * s);
      if (!std::isfinite(corr.real()) || !std::isfinite(corr.imag())) continue;
      z[k] -= corr;
      worst = std::max(worst, std::abs(corr) / std::max(1.0L, std::abs(z[k])));
    }
    if (worst < 1e-17L) break;
  }
  return z;
}

}  // namespace

std::vector<Complex> polynomial_roots(const std::vector<Complex>& coeffs) {
  std::vector<Complex> c = coeffs;
  while (!c.empty() && c.back().is_zero()) c.pop_back();
  if (c.size() < 2) throw DomainError("polynomial_roots: degree must be positive");
  int n = int(c.size()) - 1;
  long prec = mp::precision();
  mp::PrecisionScope scope(prec + 32);
  Complex lead = c[n];
  for (auto& v : c) v = v / lead;

  std::vector<cld> seeds = seed_roots(c);
  std::vector<Complex> z(n);
  for (int k = 0; k < n; ++k) z[k] = Complex(Real(double(seeds[k].real())), Real(double(seeds[k].imag())));
  for (int k = 0; k < n; ++k) {
    mpfr_set_ld(z[k].re.get(), seeds[k].real(), MPFR_RNDN);
    mpfr_set_ld(z[k].im.get(), seeds[k].imag(), MPFR_RNDN);
  }
  Real tol = mp::two_pow(-(prec + 8));
  int quiet_sweeps = 0;
  for (int it = 0; it < 400; ++it) {
    Real worst(0);
    for (int k = 0; k < n; ++k) {
      Complex p = c[n], dp;
      for (int j = n - 1; j >= 0; --j) {
        dp = dp * z[k] + p;
        p = p * z[k] + c[j];
      }
      if (p.is_zero()) continue;
      Complex w = p / dp;
      Complex s;
      for (int j = 0; j < n; ++j)
        if (j != k) s += Complex(1) / (z[k] - z[j]);
      Complex corr = w / (Complex(1) - w * s);
      z[k] -= corr;
      Real rel = mp::abs(corr) / mp::max(Real(1), mp::abs(z[k]));
      if (rel > worst) worst = rel;
    }
    if (worst < tol) {
      if (++quiet_sweeps >= 2) break;
    }
  }
  std::vector<Complex> out;
  out.reserve(n);
  mp::PrecisionScope back(prec);
  for (auto& r : z) out.push_back(Complex(Real(r.re) + 0, Real(r.im) + 0));
  return out;
}

std::vector<Complex> polynomial_roots(const exact::RatPoly& p) {
  if (p.degree() < 1) throw DomainError("polynomial_roots: degree must be positive");
  std::vector<Complex> c;
  {
    mp::PrecisionScope scope(mp::precision() + 32);
    for (const auto& q : p.coeffs()) c.emplace_back(Real(q), Real(0));
  }
  return polynomial_roots(c);
}

}  // namespace bettimap::numeric
