#include "bettimap/tangency/intlattice.hpp"

#include <algorithm>
#include <functional>

#include "bettimap/error.hpp"

namespace bettimap::tangency {

namespace {

using exact::Rational;

void axpy(IntVector& row, const Integer& q, const IntVector& other) {
  for (std::size_t j = 0; j < row.size(); ++j) row[j] -= q * other[j];
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer round_rational(const Rational& x) {
  // floor(x + 1/2)
  Rational y = x + Rational(1, 2);
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), y.get_num_mpz_t(), y.get_den_mpz_t());
  return q;
}

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

IntMatrix hermite_normal_form(IntMatrix a) {
  if (a.empty()) return a;
  std::size_t n = a[0].size();
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < a.size(); ++col) {
    for (;;) {
      std::size_t piv = a.size();
      for (std::size_t i = r; i < a.size(); ++i)
        if (a[i][col] != 0 && (piv == a.size() || abs(a[i][col]) < abs(a[piv][col]))) piv = i;
      if (piv == a.size()) break;
      std::swap(a[r], a[piv]);
      bool clean = true;
      for (std::size_t i = r + 1; i < a.size(); ++i) {
        if (a[i][col] == 0) continue;
        axpy(a[i], floor_div(a[i][col], a[r][col]), a[r]);
        if (a[i][col] != 0) clean = false;
      }
      if (clean) break;
    }
    if (r < a.size() && a[r][col] != 0) {
      if (a[r][col] < 0)
        for (auto& e : a[r]) e = -e;
      for (std::size_t i = 0; i < r; ++i) axpy(a[i], floor_div(a[i][col], a[r][col]), a[r]);
      ++r;
    }
  }
  a.resize(r);
  return a;
}

std::vector<Integer> smith_invariants(IntMatrix a) {
  std::vector<Integer> out;
  if (a.empty()) return out;
  std::size_t m = a.size(), n = a[0].size();
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block goes to (t, t).
      std::size_t bi = m, bj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (a[i][j] != 0 && (bi == m || abs(a[i][j]) < abs(a[bi][bj]))) {
            bi = i;
            bj = j;
          }
      if (bi == m) return out;
      std::swap(a[t], a[bi]);
      for (auto& row : a) std::swap(row[t], row[bj]);
      bool done = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a[i][t] == 0) continue;
        axpy(a[i], floor_div(a[i][t], a[t][t]), a[t]);
        if (a[i][t] != 0) done = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a[t][j] == 0) continue;
        Integer q = floor_div(a[t][j], a[t][t]);
        for (std::size_t i = 0; i < m; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) done = false;
      }
      if (!done) continue;
      // Divisibility of the trailing block by the pivot.
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (a[i][j] % a[t][t] != 0) {
            bad = i;
            break;
          }
      if (bad == m) break;
      for (std::size_t j = 0; j < n; ++j) a[t][j] += a[bad][j];
    }
    out.push_back(abs(a[t][t]));
  }
  return out;
}

std::size_t rank(const IntMatrix& rows) { return hermite_normal_form(rows).size(); }

IntMatrix lll_reduce(IntMatrix b) {
  std::size_t d = b.size();
  if (d <= 1) return b;
  std::size_t n = b[0].size();
  std::vector<std::vector<Rational>> bs(d, std::vector<Rational>(n));
  std::vector<std::vector<Rational>> mu(d, std::vector<Rational>(d));
  std::vector<Rational> B(d);
  auto gram_schmidt = [&]() {
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < n; ++j) bs[i][j] = Rational(b[i][j]);
      for (std::size_t k = 0; k < i; ++k) {
        std::vector<Rational> bi(n);
        for (std::size_t j = 0; j < n; ++j) bi[j] = Rational(b[i][j]);
        mu[i][k] = dot(bi, bs[k]) / B[k];
        for (std::size_t j = 0; j < n; ++j) bs[i][j] -= mu[i][k] * bs[k][j];
      }
      B[i] = dot(bs[i], bs[i]);
      if (B[i] == 0) throw DomainError("lll_reduce: rows are linearly dependent");
    }
  };
  auto size_reduce = [&](std::size_t k, std::size_t l) {
    Integer q = round_rational(mu[k][l]);
    if (q == 0) return;
    axpy(b[k], q, b[l]);
    for (std::size_t j = 0; j < l; ++j) mu[k][j] -= Rational(q) * mu[l][j];
    mu[k][l] -= Rational(q);
  };
  gram_schmidt();
  const Rational delta(3, 4);
  std::size_t k = 1;
  long guard = 0;
  while (k < d) {
    if (++guard > 1000000) throw NumericalError("lll_reduce: no convergence");
    size_reduce(k, k - 1);
    if (B[k] < (delta - mu[k][k - 1] * mu[k][k - 1]) * B[k - 1]) {
      std::swap(b[k], b[k - 1]);
      gram_schmidt();
      k = std::max<std::size_t>(k - 1, 1);
    } else {
      for (std::size_t l = k - 1; l-- > 0;) size_reduce(k, l);
      ++k;
    }
  }
  return b;
}

std::optional<IntVector> hnf_coordinates(const IntMatrix& h, const IntVector& v) {
  IntVector c(h.size());
  IntVector rest = v;
  for (std::size_t i = 0; i < h.size(); ++i) {
    std::size_t p = 0;
    while (p < h[i].size() && h[i][p] == 0) ++p;
    for (std::size_t j = 0; j < p; ++j)
      if (rest[j] != 0) return std::nullopt;
    if (rest[p] % h[i][p] != 0) return std::nullopt;
    c[i] = rest[p] / h[i][p];
    axpy(rest, c[i], h[i]);
  }
  for (const auto& e : rest)
    if (e != 0) return std::nullopt;
  return c;
}

std::vector<IntVector> enumerate_box(const IntMatrix& h, long bound) {
  std::vector<IntVector> out;
  if (h.empty()) return out;
  std::size_t n = h[0].size();
  std::vector<std::size_t> piv;
  for (const auto& row : h) {
    std::size_t p = 0;
    while (row[p] == 0) ++p;
    piv.push_back(p);
  }
  Integer T(bound);
  IntVector cur(n, Integer(0));
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == h.size()) {
      for (const auto& e : cur)
        if (abs(e) > T) return;
      out.push_back(cur);
      return;
    }
    // cur[piv[i]] + c h[i][piv[i]] must lie in [-T, T].
    const Integer& hp = h[i][piv[i]];
    Integer lo = -floor_div(T + cur[piv[i]], hp);
    Integer hi = floor_div(T - cur[piv[i]], hp);
    for (Integer c = lo; c <= hi; ++c) {
      IntVector saved = cur;
      for (std::size_t j = 0; j < n; ++j) cur[j] += c * h[i][j];
      // Coordinates before the next pivot are final once row i is placed.
      std::size_t next = i + 1 < h.size() ? piv[i + 1] : n;
      bool ok = true;
      for (std::size_t j = piv[i]; j < next && ok; ++j)
        if (abs(cur[j]) > T) ok = false;
      if (ok) rec(i + 1);
      cur = std::move(saved);
    }
  };
  rec(0);
  return out;
}

}  // namespace bettimap::tangency
