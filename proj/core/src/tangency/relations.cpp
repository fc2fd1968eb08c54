#include "bettimap/tangency/relations.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "bettimap/error.hpp"

namespace bettimap::tangency {

long RelationVector::norm() const {
  long m = 0;
  for (std::size_t i = 0; i < n(); ++i) m = std::max(m, std::labs(a[i]));
  return m;
}

std::string RelationVector::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
  os << ')';
  return os.str();
}

bool canonical_less(const std::vector<long>& x, const std::vector<long>& y) {
  auto nrm = [](const std::vector<long>& v) {
    long m = 0;
    for (long e : v) m = std::max(m, std::labs(e));
    return m;
  };
  long nx = nrm(x), ny = nrm(y);
  if (nx != ny) return nx < ny;
  return x < y;
}

std::vector<std::vector<long>> enumerate_heads(std::size_t n, long bound) {
  std::vector<std::vector<long>> out;
  if (n == 0 || bound < 1) return out;
  std::vector<long> cur(n, -bound);
  for (;;) {
    auto first = std::find_if(cur.begin(), cur.end(), [](long e) { return e != 0; });
    if (first != cur.end() && *first > 0) out.push_back(cur);
    std::size_t i = n;
    while (i > 0 && cur[i - 1] == bound) cur[--i] = -bound;
    if (i == 0) break;
    ++cur[i - 1];
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

Real relation_tolerance() {
  double e = -8.0 * double(mp::target_bits()) / 128.0;
  return Real(std::pow(10.0, e));
}

namespace {

// Values that must combine to integers (Full) and to zero (Singular).
struct Targets {
  std::vector<std::vector<Real>> integral;  // per coordinate: values per section
  std::vector<std::vector<Real>> zero;
};

Targets targets_of(const betti::ThetaPoint& th, RelationLattice::Kind kind) {
  Targets t;
  std::size_t n = th.sections();
  t.integral.resize(2);
  for (std::size_t j = 0; j < n; ++j) {
    t.integral[0].push_back(th.u(j));
    t.integral[1].push_back(th.v(j));
  }
  if (kind == RelationLattice::Kind::Singular) {
    t.zero.resize(2);
    for (std::size_t j = 0; j < n; ++j) {
      t.zero[0].push_back(th.du(j));
      t.zero[1].push_back(th.dv(j));
    }
  }
  return t;
}

bool verify(const Targets& t, const std::vector<long>& a, const Real& tol, long* ints = nullptr) {
  for (std::size_t c = 0; c < t.integral.size(); ++c) {
    Real s(0);
    for (std::size_t j = 0; j < a.size(); ++j) s += t.integral[c][j] * a[j];
    Real r = mp::round(s);
    if (mp::abs(s - r) > tol) return false;
    if (ints) ints[c] = r.to_long();
  }
  for (const auto& row : t.zero) {
    Real s(0);
    for (std::size_t j = 0; j < a.size(); ++j) s += row[j] * a[j];
    if (mp::abs(s) > tol) return false;
  }
  return true;
}

}  // namespace

RelationLattice relation_lattice(const betti::ThetaPoint& theta, RelationLattice::Kind kind, long bound) {
  std::size_t n = theta.sections();
  Targets t = targets_of(theta, kind);
  Real tol = relation_tolerance();
  std::size_t ni = t.integral.size(), nz = t.zero.size();
  std::size_t dim = n + ni + nz;
  Real W = mp::two_pow(3 * mp::target_bits() / 4);
  IntMatrix rows;
  for (std::size_t j = 0; j < n; ++j) {
    IntVector r(dim, Integer(0));
    r[j] = 1;
    for (std::size_t c = 0; c < ni; ++c) r[n + c] = (t.integral[c][j] * W).round_to_mpz();
    for (std::size_t c = 0; c < nz; ++c) r[n + ni + c] = (t.zero[c][j] * W).round_to_mpz();
    rows.push_back(r);
  }
  Integer w = W.round_to_mpz();
  for (std::size_t c = 0; c < ni; ++c) {
    IntVector r(dim, Integer(0));
    r[n + c] = w;
    rows.push_back(r);
  }
  // Zero targets get no integer row, so the lattice has rank n + ni in Z^dim.
  IntMatrix red = lll_reduce(rows);
  IntMatrix heads;
  for (const auto& r : red) {
    std::vector<long> a(n);
    bool small = true;
    for (std::size_t j = 0; j < n && small; ++j) {
      if (abs(r[j]) > bound) small = false;
      else a[j] = r[j].get_si();
    }
    if (!small) continue;
    if (std::all_of(a.begin(), a.end(), [](long e) { return e == 0; })) continue;
    if (!verify(t, a, tol)) continue;
    IntVector h(n);
    for (std::size_t j = 0; j < n; ++j) h[j] = a[j];
    heads.push_back(h);
  }
  RelationLattice L;
  L.kind = kind;
  L.generators = hermite_normal_form(heads);
  return L;
}

std::vector<RelationVector> relation_candidates(const betti::ThetaPoint& theta, long T) {
  if (T < 1) throw DomainError("relation_candidates: T must be positive");
  RelationLattice L = relation_lattice(theta, RelationLattice::Kind::Full, T);
  Targets t = targets_of(theta, RelationLattice::Kind::Full);
  Real tol = relation_tolerance();
  std::vector<RelationVector> out;
  for (const auto& v : enumerate_box(L.generators, T)) {
    std::vector<long> a(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) a[j] = v[j].get_si();
    std::size_t k = 0;
    while (k < a.size() && a[k] == 0) ++k;
    if (k == a.size() || a[k] < 0) continue;
    long ints[2];
    if (!verify(t, a, tol, ints)) continue;
    RelationVector r;
    r.a = a;
    r.a.push_back(ints[0]);
    r.a.push_back(ints[1]);
    out.push_back(r);
  }
  std::sort(out.begin(), out.end(),
            [](const RelationVector& x, const RelationVector& y) { return canonical_less(x.a, y.a); });
  return out;
}

bool saturation_check(const RelationLattice& L, const RelationLattice& Lsing) {
  IntMatrix H = hermite_normal_form(L.generators);
  IntMatrix coords;
  for (const auto& s : Lsing.generators) {
    auto c = hnf_coordinates(H, s);
    if (!c) throw DomainError("not a sublattice");
    coords.push_back(*c);
  }
  if (coords.empty()) return true;
  for (const auto& d : smith_invariants(coords))
    if (d != 1) return false;
  return true;
}

}  // namespace bettimap::tangency
