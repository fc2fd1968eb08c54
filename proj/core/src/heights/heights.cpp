#include "bettimap/heights/heights.hpp"

#include <algorithm>

#include "bettimap/error.hpp"
#include "bettimap/numeric/polyroots.hpp"
#include "bettimap/tangency/intlattice.hpp"

namespace bettimap::heights {

namespace {

Real log_abs(const exact::Integer& z) {
  if (z == 0) throw DomainError("log of zero");
  return mp::log(Real(exact::Integer(abs(z))));
}

long bit_size(const Rational& q) {
  return long(mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2));
}

}  // namespace

AlgebraicNumber AlgebraicNumber::rational(const Rational& q) {
  AlgebraicNumber a;
  a.minpoly = RatPoly(std::vector<Rational>{-q, Rational(1)});
  a.approx = Complex(Real(q), Real(0));
  return a;
}

Real naive_height(const Rational& x) { return mp::log(Real(rational_height_H(x))); }

Real weil_height(const AlgebraicNumber& x) {
  if (x.minpoly.degree() < 1) throw DomainError("weil_height: minimal polynomial must be nonconstant");
  if (!exact::is_irreducible(x.minpoly)) throw DomainError("weil_height: polynomial is reducible over Q");
  auto z = exact::primitive_integer(x.minpoly);
  auto roots = numeric::polynomial_roots(x.minpoly);
  if (roots.size() > 1) {
    Real sep = mp::abs(roots[0] - roots[1]);
    for (std::size_t i = 0; i < roots.size(); ++i)
      for (std::size_t j = i + 1; j < roots.size(); ++j) sep = mp::min(sep, mp::abs(roots[i] - roots[j]));
    Real best = mp::abs(x.approx - roots[0]);
    for (const auto& r : roots) best = mp::min(best, mp::abs(x.approx - r));
    if (best * 2 >= sep) throw DomainError("weil_height: approximation does not single out a conjugate");
  }
  Real m = log_abs(z.back());
  for (const auto& r : roots) {
    Real a = mp::abs(r);
    if (a > 1) m += mp::log(a);
  }
  return m / long(roots.size());
}

std::optional<AlgebraicNumber> recognize_algebraic(const Complex& z, int max_degree) {
  long target = mp::target_bits();
  Real scale = mp::max(Real(1), mp::abs(z));
  Real accept = mp::two_pow(-target / 2) * scale;
  for (int d = 1; d <= max_degree; ++d) {
    long weight_bits = 3 * target / 4;
    tangency::IntMatrix rows;
    Complex p(Real(1), Real(0));
    for (int k = 0; k <= d; ++k) {
      tangency::IntVector row(d + 3, exact::Integer(0));
      row[k] = 1;
      row[d + 1] = mp::ldexp(p.re, weight_bits).round_to_mpz();
      row[d + 2] = mp::ldexp(p.im, weight_bits).round_to_mpz();
      rows.push_back(row);
      p = p * z;
    }
    auto red = tangency::lll_reduce(rows);
    exact::Integer cap = exact::Integer(1) << std::max<long>(1, target / (2 * (d + 1)));
    for (const auto& r : red) {
      std::vector<exact::Integer> c(r.begin(), r.begin() + d + 1);
      bool small = std::all_of(c.begin(), c.end(), [&](const exact::Integer& v) { return abs(v) <= cap; });
      RatPoly poly = exact::from_integer(c);
      if (!small || poly.degree() < 1) continue;
      for (const auto& f : exact::factor(poly).factors) {
        for (const auto& root : numeric::polynomial_roots(f.factor)) {
          if (mp::abs(root - z) <= accept) {
            AlgebraicNumber a;
            a.minpoly = f.factor;
            a.approx = root;
            return a;
          }
        }
      }
    }
  }
  return std::nullopt;
}

CanonicalHeight canonical_height(const Rational& x0, const Rational& lambda, int K, long max_bits) {
  if (lambda == 0 || lambda == 1) throw DomainError("canonical_height: lambda must avoid 0 and 1");
  if (K < 1) throw DomainError("canonical_height: need at least one doubling");
  CanonicalHeight out;
  std::vector<Real> h;
  std::vector<Rational> seen;
  Rational x = x0;
  for (int k = 0; k <= K; ++k) {
    if (bit_size(x) > max_bits)
      throw NumericalError("increase precision: x(2^" + std::to_string(k) + " P) needs " +
                           std::to_string(bit_size(x)) + " bits");
    h.push_back(naive_height(x));
    bool cycle = std::find(seen.begin(), seen.end(), x) != seen.end();
    seen.push_back(x);
    Rational y2 = x * (x - 1) * (x - lambda);
    if (y2 == 0 || cycle) {
      out.value = 0;
      out.tolerance = 0;
      out.iterations = k;
      out.torsion = true;
      return out;
    }
    if (k == K) break;
    Rational t = x * x - lambda;
    x = t * t / (4 * y2);
  }
  Real four_k = mp::pow(Real(4), long(K));
  out.value = h[K] / four_k;
  out.iterations = K;
  Real defect = 0;
  for (int j = 0; j < K; ++j) {
    defect = mp::max(defect, mp::abs(h[j + 1] - h[j] * 4));
    out.cauchy_gaps.push_back(mp::abs(h[j + 1] / mp::pow(Real(4), long(j + 1)) - h[j] / mp::pow(Real(4), long(j))));
  }
  // Tail sum of defects / 4^(j+1) for j >= K, with the observed defect doubled.
  out.tolerance = defect * 2 / (four_k * 3);
  return out;
}

}  // namespace bettimap::heights
