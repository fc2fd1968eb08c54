#include "bettimap/exact/bivar.hpp"

#include <sstream>

#include "bettimap/error.hpp"

namespace bettimap::exact {

BivarPoly::BivarPoly(const RatPoly& c) {
  if (!c.is_zero()) c_.push_back(c);
}

BivarPoly::BivarPoly(std::vector<RatPoly> coeffs) : c_(std::move(coeffs)) { trim(); }

void BivarPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

int BivarPoly::degree_t() const {
  int d = -1;
  for (const auto& c : c_) d = std::max(d, c.degree());
  return d;
}

const RatPoly& BivarPoly::coeff(int i) const {
  static const RatPoly zero;
  if (i < 0 || i >= int(c_.size())) return zero;
  return c_[i];
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

BivarPoly& BivarPoly::operator*=(const BivarPoly& o) {
  *this = *this * o;
  return *this;
}

BivarPoly BivarPoly::operator-() const {
  BivarPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

RatPoly BivarPoly::homogenized_at(const RatPoly& p, const RatPoly& q) const {
  int d = degree_x();
  if (d < 0) return RatPoly();
  std::vector<RatPoly> pp(d + 1), qp(d + 1);
  pp[0] = RatPoly(1);
  qp[0] = RatPoly(1);
  for (int i = 1; i <= d; ++i) {
    pp[i] = pp[i - 1] * p;
    qp[i] = qp[i - 1] * q;
  }
  RatPoly acc;
  for (int i = 0; i <= d; ++i)
    if (!c_[i].is_zero()) acc += c_[i] * pp[i] * qp[d - i];
  return acc;
}

RatFunc BivarPoly::evaluate_at(const RatFunc& X) const {
  int d = degree_x();
  if (d < 0) return RatFunc();
  return RatFunc(homogenized_at(X.num(), X.den()), pow(X.den(), d));
}

mp::Complex BivarPoly::evaluate(const mp::Complex& x, const mp::Complex& t) const {
  mp::Complex acc;
  for (int i = degree_x(); i >= 0; --i) {
    acc *= x;
    acc += c_[i].evaluate(t);
  }
  return acc;
}

BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
  if (a.is_zero() || b.is_zero()) return BivarPoly();
  std::vector<RatPoly> r(a.degree_x() + b.degree_x() + 1);
  for (int i = 0; i <= a.degree_x(); ++i) {
    if (a.coeff(i).is_zero()) continue;
    for (int j = 0; j <= b.degree_x(); ++j)
      if (!b.coeff(j).is_zero()) r[i + j] += a.coeff(i) * b.coeff(j);
  }
  return BivarPoly(std::move(r));
}

BivarPoly pow(const BivarPoly& p, int e) {
  BivarPoly r(1), b = p;
  while (e > 0) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

namespace {

// Determinant over Q by Gaussian elimination.
Rational determinant(std::vector<std::vector<Rational>> a) {
  int n = int(a.size());
  Rational det = 1;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (a[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det *= a[col][col];
    Rational inv = 1 / a[col][col];
    for (int r = col + 1; r < n; ++r) {
      if (a[r][col] == 0) continue;
      Rational f = a[r][col] * inv;
      for (int c = col; c < n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return det;
}

// Sylvester determinant with formal degrees m, n (coefficient lists ascending).
Rational sylvester(const std::vector<Rational>& p, int m, const std::vector<Rational>& q, int n) {
  int N = m + n;
  if (N == 0) return 1;
  std::vector<std::vector<Rational>> S(N, std::vector<Rational>(N, Rational(0)));
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) S[r][r + k] = p[m - k];
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) S[n + r][r + k] = q[n - k];
  return determinant(std::move(S));
}

}  // namespace

Rational resultant(const RatPoly& p, const RatPoly& q) {
  if (p.is_zero() || q.is_zero()) return 0;
  std::vector<Rational> pc(p.coeffs()), qc(q.coeffs());
  return sylvester(pc, p.degree(), qc, q.degree());
}

RatPoly resultant_x(const BivarPoly& p, const BivarPoly& q) {
  if (p.is_zero() || q.is_zero()) return RatPoly();
  int m = p.degree_x(), n = q.degree_x();
  int D = m * std::max(q.degree_t(), 0) + n * std::max(p.degree_t(), 0);
  std::vector<Rational> xs, ys;
  for (int k = 0; k <= D; ++k) {
    Rational t0(k);
    std::vector<Rational> pc(m + 1), qc(n + 1);
    for (int i = 0; i <= m; ++i) pc[i] = p.coeff(i).evaluate(t0);
    for (int i = 0; i <= n; ++i) qc[i] = q.coeff(i).evaluate(t0);
    xs.push_back(t0);
    ys.push_back(sylvester(pc, m, qc, n));
  }
  // Newton divided differences.
  std::vector<Rational> c = ys;
  for (int j = 1; j <= D; ++j)
    for (int i = D; i >= j; --i) c[i] = (c[i] - c[i - 1]) / (xs[i] - xs[i - j]);
  RatPoly acc(c[D]);
  for (int i = D - 1; i >= 0; --i) acc = acc * RatPoly(std::vector<Rational>{-xs[i], Rational(1)}) + RatPoly(c[i]);
  return acc;
}

std::string to_string(const BivarPoly& p, const std::string& xvar, const std::string& tvar) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= p.degree_x(); ++i) {
    const RatPoly& c = p.coeff(i);
    for (int j = 0; j <= c.degree(); ++j) {
      const Rational& v = c.coeff(j);
      if (v == 0) continue;
      Rational a = abs(v);
      if (first) {
        if (v < 0) os << "-";
      } else {
        os << (v < 0 ? " - " : " + ");
      }
      first = false;
      bool wrote = false;
      if (a != 1 || (i == 0 && j == 0)) {
        os << a.get_str();
        wrote = true;
      }
      if (i > 0) {
        os << (wrote ? "*" : "") << xvar;
        if (i > 1) os << "^" << i;
        wrote = true;
      }
      if (j > 0) {
        os << (wrote ? "*" : "") << tvar;
        if (j > 1) os << "^" << j;
      }
    }
  }
  return os.str();
}

}  // namespace bettimap::exact
