#include "bettimap/exact/poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "bettimap/error.hpp"
#include "zpoly.hpp"

namespace bettimap::exact {

namespace detail {

void ztrim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

mpz_class zcontent(const ZPoly& p) {
  mpz_class g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

ZPoly zprimitive(const ZPoly& p) {
  ZPoly r = p;
  ztrim(r);
  if (r.empty()) return r;
  mpz_class g = zcontent(r);
  if (r.back() < 0) g = -g;
  for (auto& c : r) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return r;
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  ztrim(r);
  return r;
}

ZPoly zprem(const ZPoly& a, const ZPoly& b) {
  ZPoly r = a;
  ztrim(r);
  int db = zdeg(b);
  int e = zdeg(r) - db + 1;
  const mpz_class& lb = b.back();
  while (zdeg(r) >= db) {
    mpz_class lr = r.back();
    int shift = zdeg(r) - db;
    for (auto& c : r) c *= lb;
    for (int j = 0; j <= db; ++j) mpz_submul(r[j + shift].get_mpz_t(), lr.get_mpz_t(), b[j].get_mpz_t());
    ztrim(r);
    --e;
  }
  if (e > 0 && !r.empty()) {
    mpz_class m;
    mpz_pow_ui(m.get_mpz_t(), lb.get_mpz_t(), e);
    for (auto& c : r) c *= m;
  }
  return r;
}

bool zdivide(const ZPoly& a, const ZPoly& b, ZPoly& q) {
  ZPoly r = a;
  ztrim(r);
  q.clear();
  int db = zdeg(b);
  if (db < 0) return false;
  if (zdeg(r) < db) {
    q.clear();
    return r.empty();
  }
  q.assign(zdeg(r) - db + 1, 0);
  const mpz_class& lb = b.back();
  while (!r.empty() && zdeg(r) >= db) {
    if (!mpz_divisible_p(r.back().get_mpz_t(), lb.get_mpz_t())) return false;
    mpz_class c;
    mpz_divexact(c.get_mpz_t(), r.back().get_mpz_t(), lb.get_mpz_t());
    int shift = zdeg(r) - db;
    q[shift] = c;
    for (int j = 0; j <= db; ++j) mpz_submul(r[j + shift].get_mpz_t(), c.get_mpz_t(), b[j].get_mpz_t());
    ztrim(r);
  }
  ztrim(q);
  return r.empty();
}

ZPoly zgcd(ZPoly a, ZPoly b) {
  a = zprimitive(a);
  b = zprimitive(b);
  if (a.empty()) return b;
  if (b.empty()) return a;
  if (zdeg(a) < zdeg(b)) std::swap(a, b);
  mpz_class g = 1, h = 1;
  for (;;) {
    int delta = zdeg(a) - zdeg(b);
    ZPoly r = zprem(a, b);
    if (r.empty()) return zprimitive(b);
    if (zdeg(r) == 0) return ZPoly{1};
    a = std::move(b);
    mpz_class hd;
    mpz_pow_ui(hd.get_mpz_t(), h.get_mpz_t(), delta);
    mpz_class denom = g * hd;
    for (auto& c : r) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), denom.get_mpz_t());
    b = std::move(r);
    g = a.back();
    if (delta > 0) {
      mpz_class gd, hd1;
      mpz_pow_ui(gd.get_mpz_t(), g.get_mpz_t(), delta);
      mpz_pow_ui(hd1.get_mpz_t(), h.get_mpz_t(), delta - 1);
      mpz_divexact(h.get_mpz_t(), gd.get_mpz_t(), hd1.get_mpz_t());
    }
  }
}

}  // namespace detail

using detail::ZPoly;

namespace {
const Rational& zero_q() {
  static const Rational z(0);
  return z;
}
}  // namespace

RatPoly::RatPoly(const Rational& c) {
  if (c != 0) c_.push_back(c);
}

RatPoly::RatPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  for (auto& c : c_) c.canonicalize();
  trim();
}

RatPoly RatPoly::monomial(const Rational& c, int k) {
  if (c == 0) return RatPoly();
  std::vector<Rational> v(k + 1, Rational(0));
  v[k] = c;
  return RatPoly(std::move(v));
}

void RatPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rational& RatPoly::coeff(int k) const {
  if (k < 0 || k >= int(c_.size())) return zero_q();
  return c_[k];
}

const Rational& RatPoly::leading() const {
  if (c_.empty()) return zero_q();
  return c_.back();
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

RatPoly& RatPoly::operator*=(const RatPoly& o) {
  *this = *this * o;
  return *this;
}

RatPoly& RatPoly::operator*=(const Rational& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

RatPoly RatPoly::operator-() const {
  RatPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Rational RatPoly::evaluate(const Rational& t_in) const {
  Rational t = t_in;
  t.canonicalize();
  Rational acc = 0;
  for (int k = degree(); k >= 0; --k) acc = acc * t + c_[k];
  return acc;
}

mp::Complex RatPoly::evaluate(const mp::Complex& t) const {
  mp::Complex acc;
  for (int k = degree(); k >= 0; --k) {
    acc *= t;
    acc.re += mp::Real(c_[k]);
  }
  return acc;
}

void RatPoly::evaluate3(const mp::Complex& t, mp::Complex& v, mp::Complex& d1, mp::Complex& d2) const {
  v = mp::Complex();
  d1 = mp::Complex();
  d2 = mp::Complex();
  for (int k = degree(); k >= 0; --k) {
    d2 = d2 * t + d1 * 2;
    d1 = d1 * t + v;
    v *= t;
    v.re += mp::Real(c_[k]);
  }
}

RatPoly RatPoly::derivative() const {
  if (c_.size() <= 1) return RatPoly();
  std::vector<Rational> d(c_.size() - 1);
  for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * long(k);
  return RatPoly(std::move(d));
}

RatPoly RatPoly::monic() const {
  if (c_.empty()) return *this;
  Rational inv = 1 / c_.back();
  return *this * inv;
}

RatPoly RatPoly::compose(const RatPoly& inner) const {
  RatPoly acc;
  for (int k = degree(); k >= 0; --k) acc = acc * inner + RatPoly(c_[k]);
  return acc;
}

RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return RatPoly();
  // Multiply integer images to avoid a gcd per coefficient product.
  mpz_class da = 1, db = 1;
  for (const auto& c : a.coeffs()) mpz_lcm(da.get_mpz_t(), da.get_mpz_t(), c.get_den_mpz_t());
  for (const auto& c : b.coeffs()) mpz_lcm(db.get_mpz_t(), db.get_mpz_t(), c.get_den_mpz_t());
  ZPoly za(a.coeffs().size()), zb(b.coeffs().size());
  for (size_t i = 0; i < za.size(); ++i) {
    mpz_divexact(za[i].get_mpz_t(), da.get_mpz_t(), a.coeffs()[i].get_den_mpz_t());
    za[i] *= a.coeffs()[i].get_num();
  }
  for (size_t i = 0; i < zb.size(); ++i) {
    mpz_divexact(zb[i].get_mpz_t(), db.get_mpz_t(), b.coeffs()[i].get_den_mpz_t());
    zb[i] *= b.coeffs()[i].get_num();
  }
  ZPoly zr = detail::zmul(za, zb);
  mpz_class d = da * db;
  std::vector<Rational> r(zr.size());
  for (size_t i = 0; i < zr.size(); ++i) {
    r[i] = Rational(zr[i], d);
    r[i].canonicalize();
  }
  return RatPoly(std::move(r));
}

RatPoly operator*(RatPoly a, const Rational& s) { return a *= s; }
RatPoly operator*(const Rational& s, RatPoly a) { return a *= s; }

RatPoly pow(const RatPoly& p, int e) {
  if (e < 0) throw DomainError("negative polynomial power");
  RatPoly r(1), b = p;
  while (e > 0) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.degree() < b.degree()) return {RatPoly(), a};
  std::vector<Rational> r = a.coeffs();
  std::vector<Rational> q(a.degree() - b.degree() + 1, Rational(0));
  Rational inv = 1 / b.leading();
  int db = b.degree();
  for (int k = a.degree(); k >= db; --k) {
    if (r[k] == 0) continue;
    Rational c = r[k] * inv;
    q[k - db] = c;
    for (int j = 0; j <= db; ++j) r[k - db + j] -= c * b.coeffs()[j];
  }
  r.resize(db);
  return {RatPoly(std::move(q)), RatPoly(std::move(r))};
}

RatPoly operator/(const RatPoly& a, const RatPoly& b) { return divmod(a, b).first; }
RatPoly operator%(const RatPoly& a, const RatPoly& b) { return divmod(a, b).second; }

bool divides(const RatPoly& d, const RatPoly& p) { return (p % d).is_zero(); }

std::vector<Integer> primitive_integer(const RatPoly& p) {
  if (p.is_zero()) return {};
  mpz_class den = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  ZPoly z(p.coeffs().size());
  for (size_t i = 0; i < z.size(); ++i) {
    mpz_divexact(z[i].get_mpz_t(), den.get_mpz_t(), p.coeffs()[i].get_den_mpz_t());
    z[i] *= p.coeffs()[i].get_num();
  }
  return detail::zprimitive(z);
}

RatPoly from_integer(const std::vector<Integer>& z) {
  std::vector<Rational> c(z.begin(), z.end());
  return RatPoly(std::move(c));
}

RatPoly gcd(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() && b.is_zero()) throw DomainError("gcd undefined: both arguments are zero");
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  ZPoly g = detail::zgcd(primitive_integer(a), primitive_integer(b));
  return from_integer(g).monic();
}

ExtGcd extended_gcd(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() && b.is_zero()) throw DomainError("gcd undefined: both arguments are zero");
  RatPoly r0 = a, r1 = b, s0(1), s1, t0, t1(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    RatPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  Rational inv = 1 / r0.leading();
  return {r0 * inv, s0 * inv, t0 * inv};
}

std::vector<SquarefreeFactor> squarefree_decomposition(const RatPoly& p) {
  if (p.is_zero()) throw DomainError("squarefree decomposition of zero");
  std::vector<SquarefreeFactor> out;
  if (p.degree() < 1) return out;
  RatPoly f = p.monic();
  RatPoly df = f.derivative();
  RatPoly b = gcd(f, df);
  RatPoly c = f / b;
  RatPoly d = df / b - c.derivative();
  int i = 1;
  while (c.degree() > 0) {
    RatPoly a = gcd(c, d);
    if (a.degree() > 0) out.push_back({a, i});
    c = c / a;
    d = d / a - c.derivative();
    ++i;
  }
  return out;
}

bool is_squarefree(const RatPoly& p) {
  if (p.degree() < 1) return true;
  return gcd(p, p.derivative()).degree() == 0;
}

bool canonical_less(const RatPoly& a, const RatPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int k = a.degree(); k >= 0; --k) {
    int c = cmp(a.coeff(k), b.coeff(k));
    if (c != 0) return c < 0;
  }
  return false;
}

std::string to_string(const RatPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= p.degree(); ++k) {
    const Rational& c = p.coeff(k);
    if (c == 0) continue;
    Rational a = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const RatPoly& p) { return os << to_string(p); }

}  // namespace bettimap::exact
