// Factorisation over Q: squarefree split, then Zassenhaus on each part.

#include <algorithm>
#include <cstdint>
#include <random>

#include "bettimap/error.hpp"
#include "bettimap/exact/poly.hpp"
#include "zpoly.hpp"

namespace bettimap::exact {

using detail::ZPoly;

namespace {

using u64 = std::uint64_t;
using MPoly = std::vector<u64>;  // coefficients modulo a small prime

struct Fp {
  u64 p;

  u64 add(u64 a, u64 b) const { return (a + b) % p; }
  u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
  u64 mul(u64 a, u64 b) const { return (a * b) % p; }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    a %= p;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const { return pow(a, p - 2); }

  void trim(MPoly& f) const {
    while (!f.empty() && f.back() == 0) f.pop_back();
  }
  MPoly reduce(const ZPoly& z) const {
    MPoly r(z.size());
    mpz_class t;
    for (size_t i = 0; i < z.size(); ++i) {
      mpz_fdiv_r_ui(t.get_mpz_t(), z[i].get_mpz_t(), p);
      r[i] = t.get_ui();
    }
    trim(r);
    return r;
  }
  MPoly monic(MPoly f) const {
    if (f.empty()) return f;
    u64 i = inv(f.back());
    for (auto& c : f) c = mul(c, i);
    return f;
  }
  MPoly mulp(const MPoly& a, const MPoly& b) const {
    if (a.empty() || b.empty()) return {};
    std::vector<unsigned __int128> acc(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
      for (size_t j = 0; j < b.size(); ++j) acc[i + j] += (unsigned __int128)a[i] * b[j];
    MPoly r(acc.size());
    for (size_t i = 0; i < acc.size(); ++i) r[i] = u64(acc[i] % p);
    trim(r);
    return r;
  }
  MPoly subp(MPoly a, const MPoly& b) const {
    if (b.size() > a.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] = sub(a[i], b[i]);
    trim(a);
    return a;
  }
  // a mod b and quotient; b nonzero.
  void divmod(const MPoly& a, const MPoly& b, MPoly& q, MPoly& r) const {
    r = a;
    trim(r);
    int db = int(b.size()) - 1;
    q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, 0);
    u64 li = inv(b.back());
    while (int(r.size()) - 1 >= db && !r.empty()) {
      int k = int(r.size()) - 1;
      u64 c = mul(r.back(), li);
      q[k - db] = c;
      for (int j = 0; j <= db; ++j) r[k - db + j] = sub(r[k - db + j], mul(c, b[j]));
      trim(r);
    }
    trim(q);
  }
  MPoly modp(const MPoly& a, const MPoly& b) const {
    MPoly q, r;
    divmod(a, b, q, r);
    return r;
  }
  MPoly gcd(MPoly a, MPoly b) const {
    trim(a);
    trim(b);
    while (!b.empty()) {
      MPoly r = modp(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }
  // s*a + t*b = 1 for coprime a, b.
  void extgcd(const MPoly& a, const MPoly& b, MPoly& s, MPoly& t) const {
    MPoly r0 = a, r1 = b, s0{1}, s1, t0, t1{1};
    while (!r1.empty()) {
      MPoly q, r;
      divmod(r0, r1, q, r);
      r0 = std::move(r1);
      r1 = std::move(r);
      MPoly s2 = subp(s0, mulp(q, s1)), t2 = subp(t0, mulp(q, t1));
      s0 = std::move(s1);
      s1 = std::move(s2);
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    u64 i = inv(r0.back());
    for (auto& c : s0) c = mul(c, i);
    for (auto& c : t0) c = mul(c, i);
    s = s0;
    t = t0;
    trim(s);
    trim(t);
  }
  MPoly powmod(MPoly base, const mpz_class& e, const MPoly& m) const {
    MPoly r{1};
    base = modp(base, m);
    size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (size_t i = bits; i-- > 0;) {
      r = modp(mulp(r, r), m);
      if (mpz_tstbit(e.get_mpz_t(), i)) r = modp(mulp(r, base), m);
    }
    return r;
  }
  MPoly deriv(const MPoly& f) const {
    if (f.size() <= 1) return {};
    MPoly d(f.size() - 1);
    for (size_t k = 1; k < f.size(); ++k) d[k - 1] = mul(f[k], k % p);
    trim(d);
    return d;
  }
};

struct DegreeBlock {
  MPoly g;
  int d;
};

// f monic squarefree over F_p.
std::vector<DegreeBlock> distinct_degree(const Fp& F, MPoly f) {
  std::vector<DegreeBlock> out;
  MPoly h{0, 1};
  MPoly x{0, 1};
  mpz_class P(static_cast<unsigned long>(F.p));
  for (int d = 1; 2 * d <= int(f.size()) - 1; ++d) {
    h = F.powmod(h, P, f);
    MPoly g = F.gcd(F.subp(h, x), f);
    if (g.size() > 1) {
      out.push_back({g, d});
      MPoly q, r;
      F.divmod(f, g, q, r);
      f = q;
      h = F.modp(h, f);
    }
  }
  if (f.size() > 1) out.push_back({f, int(f.size()) - 1});
  return out;
}

void equal_degree(const Fp& F, const MPoly& g, int d, std::mt19937_64& rng, std::vector<MPoly>& out) {
  int n = int(g.size()) - 1;
  if (n == d) {
    out.push_back(g);
    return;
  }
  mpz_class e;
  mpz_ui_pow_ui(e.get_mpz_t(), F.p, d);
  e = (e - 1) / 2;
  for (;;) {
    MPoly a(n);
    for (auto& c : a) c = rng() % F.p;
    F.trim(a);
    if (a.size() < 2) continue;
    MPoly b = F.powmod(a, e, g);
    if (b.empty()) continue;
    b[0] = F.sub(b[0], 1);
    F.trim(b);
    MPoly h = F.gcd(b, g);
    int dh = int(h.size()) - 1;
    if (dh > 0 && dh < n) {
      MPoly q, r;
      F.divmod(g, h, q, r);
      equal_degree(F, h, d, rng, out);
      equal_degree(F, F.monic(q), d, rng, out);
      return;
    }
  }
}

// Arithmetic modulo a (large) integer M.
struct Zm {
  mpz_class M;

  void red(ZPoly& f) const {
    for (auto& c : f) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), M.get_mpz_t());
    detail::ztrim(f);
  }
  ZPoly mul(const ZPoly& a, const ZPoly& b) const {
    ZPoly r = detail::zmul(a, b);
    red(r);
    return r;
  }
  ZPoly add(ZPoly a, const ZPoly& b) const {
    if (b.size() > a.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    red(a);
    return a;
  }
  ZPoly sub(ZPoly a, const ZPoly& b) const {
    if (b.size() > a.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    red(a);
    return a;
  }
  // Division by a monic polynomial.
  void divmod(const ZPoly& a, const ZPoly& b, ZPoly& q, ZPoly& r) const {
    r = a;
    red(r);
    int db = int(b.size()) - 1;
    q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, 0);
    while (!r.empty() && int(r.size()) - 1 >= db) {
      int k = int(r.size()) - 1;
      mpz_class c = r.back();
      q[k - db] = c;
      for (int j = 0; j <= db; ++j) mpz_submul(r[k - db + j].get_mpz_t(), c.get_mpz_t(), b[j].get_mpz_t());
      red(r);
    }
    red(q);
  }
};

ZPoly lift_to_z(const MPoly& f) { return ZPoly(f.begin(), f.end()); }

// Quadratic Hensel lifting of f = g*h (all monic) from modulus p to M.
void hensel_pair(const ZPoly& f, ZPoly& g, ZPoly& h, const Fp& F, const mpz_class& M) {
  MPoly sp, tp;
  F.extgcd(F.reduce(g), F.reduce(h), sp, tp);
  ZPoly s = lift_to_z(sp), t = lift_to_z(tp);
  mpz_class m = F.p;
  while (m < M) {
    mpz_class m2 = m * m;
    if (m2 > M) m2 = M;
    Zm Z{m2};
    ZPoly e = Z.sub(f, Z.mul(g, h));
    ZPoly q, r;
    Z.divmod(Z.mul(s, e), h, q, r);
    ZPoly g2 = Z.add(Z.add(g, Z.mul(t, e)), Z.mul(q, g));
    ZPoly h2 = Z.add(h, r);
    ZPoly b = Z.sub(Z.add(Z.mul(s, g2), Z.mul(t, h2)), ZPoly{1});
    ZPoly c, d;
    Z.divmod(Z.mul(s, b), h2, c, d);
    s = Z.sub(s, d);
    t = Z.sub(Z.sub(t, Z.mul(t, b)), Z.mul(c, g2));
    g = std::move(g2);
    h = std::move(h2);
    m = m2;
  }
}

// Lifts a factorisation of monic f (mod p) to one modulo M.
void hensel_tree(const ZPoly& f, const std::vector<MPoly>& parts, const Fp& F, const mpz_class& M,
                 std::vector<ZPoly>& out) {
  if (parts.size() == 1) {
    ZPoly r = f;
    Zm{M}.red(r);
    out.push_back(r);
    return;
  }
  size_t half = parts.size() / 2;
  std::vector<MPoly> left(parts.begin(), parts.begin() + half), right(parts.begin() + half, parts.end());
  MPoly gl{1}, gr{1};
  for (const auto& u : left) gl = F.mulp(gl, u);
  for (const auto& u : right) gr = F.mulp(gr, u);
  ZPoly g = lift_to_z(gl), h = lift_to_z(gr);
  hensel_pair(f, g, h, F, M);
  hensel_tree(g, left, F, M, out);
  hensel_tree(h, right, F, M, out);
}

bool next_combination(std::vector<int>& idx, int n) {
  int k = int(idx.size());
  for (int i = k - 1; i >= 0; --i) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Irreducible factors of a primitive squarefree f of degree >= 1.
std::vector<ZPoly> zassenhaus(const ZPoly& f) {
  int n = detail::zdeg(f);
  if (n <= 1) return {f};

  // Choose the prime giving the fewest modular factors among a few candidates.
  Fp best{0};
  std::vector<DegreeBlock> best_blocks;
  size_t best_count = ~size_t(0);
  int tried = 0;
  for (u64 p = 3; tried < 6 && p < 100000; p += 2) {
    if (!is_prime(p)) continue;
    mpz_class lc_mod;
    mpz_fdiv_r_ui(lc_mod.get_mpz_t(), f.back().get_mpz_t(), p);
    if (lc_mod == 0) continue;
    Fp F{p};
    MPoly fm = F.monic(F.reduce(f));
    if (F.gcd(fm, F.deriv(fm)).size() != 1) continue;
    ++tried;
    auto blocks = distinct_degree(F, fm);
    size_t count = 0;
    for (const auto& b : blocks) count += (b.g.size() - 1) / b.d;
    if (count < best_count) {
      best_count = count;
      best = F;
      best_blocks = blocks;
    }
    if (count == 1) break;
  }
  if (best.p == 0) throw NumericalError("factorisation: no suitable prime");
  if (best_count == 1) return {f};

  const Fp& F = best;
  std::mt19937_64 rng(0x5eed1234u + n);
  std::vector<MPoly> modular;
  for (const auto& b : best_blocks) equal_degree(F, b.g, b.d, rng, modular);

  // Coefficient bound for lc(f) * (factor / lc(factor)).
  mpz_class norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  mpz_class nrm;
  mpz_sqrt(nrm.get_mpz_t(), norm2.get_mpz_t());
  nrm += 1;
  mpz_class bound = abs(f.back()) * nrm;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), n);
  mpz_class M = F.p;
  while (M <= 2 * bound + 1) M *= F.p;

  // Monic image of f modulo M.
  mpz_class lc = f.back(), lcinv;
  mpz_invert(lcinv.get_mpz_t(), lc.get_mpz_t(), M.get_mpz_t());
  ZPoly fmon = f;
  for (auto& c : fmon) c *= lcinv;
  Zm{M}.red(fmon);

  std::vector<ZPoly> lifted;
  hensel_tree(fmon, modular, F, M, lifted);

  std::vector<ZPoly> result;
  ZPoly cur = f;
  std::vector<ZPoly> pool = lifted;
  mpz_class halfM = M / 2;
  auto symmetric = [&](ZPoly& g) {
    for (auto& c : g) {
      mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), M.get_mpz_t());
      if (c > halfM) c -= M;
    }
    detail::ztrim(g);
  };
  int s = 1;
  while (2 * s <= int(pool.size())) {
    bool found = false;
    std::vector<int> idx(s);
    for (int i = 0; i < s; ++i) idx[i] = i;
    do {
      ZPoly g{cur.back()};
      Zm Z{M};
      for (int i : idx) g = Z.mul(g, pool[i]);
      symmetric(g);
      g = detail::zprimitive(g);
      ZPoly q;
      if (detail::zdivide(cur, g, q)) {
        result.push_back(g);
        cur = q;
        std::vector<ZPoly> rest;
        for (int i = 0; i < int(pool.size()); ++i)
          if (std::find(idx.begin(), idx.end(), i) == idx.end()) rest.push_back(pool[i]);
        pool = std::move(rest);
        found = true;
        break;
      }
    } while (next_combination(idx, int(pool.size())));
    if (!found) ++s;
  }
  result.push_back(detail::zprimitive(cur));
  return result;
}

}  // namespace

Factorization factor(const RatPoly& p) {
  if (p.is_zero()) throw DomainError("cannot factor the zero polynomial");
  Factorization out;
  out.unit = p.leading();
  for (const auto& sq : squarefree_decomposition(p)) {
    for (const auto& z : zassenhaus(primitive_integer(sq.factor)))
      out.factors.push_back({from_integer(z).monic(), sq.multiplicity});
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const SquarefreeFactor& a, const SquarefreeFactor& b) {
    if (canonical_less(a.factor, b.factor)) return true;
    if (canonical_less(b.factor, a.factor)) return false;
    return a.multiplicity < b.multiplicity;
  });
  return out;
}

bool is_irreducible(const RatPoly& p) {
  if (p.degree() < 1) return false;
  auto f = factor(p);
  return f.factors.size() == 1 && f.factors[0].multiplicity == 1;
}

}  // namespace bettimap::exact
