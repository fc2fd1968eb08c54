#include "bettimap/tangency/detector.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <sstream>
#include <thread>

#include "bettimap/betti/betti.hpp"
#include "bettimap/error.hpp"

namespace bettimap::tangency {

namespace {

using cd = std::complex<double>;

cd to_cd(const Complex& z) { return cd(z.re.to_double(), z.im.to_double()); }

template <class F>
void parallel_for(std::size_t count, int threads, long bits, F body) {
  threads = std::max(1, std::min<int>(threads, int(count)));
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    mp::PrecisionScope scope(bits);
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      body(i);
    }
  };
  if (threads == 1) {
    worker();
    return;
  }
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
}

struct NewtonOutcome {
  bool converged = false;
  LocalData local;
  Residual r;
};

NewtonOutcome newton(const LogSource& src, const RelationVector& a, const LocalData& start, const Complex* first,
                     double max_travel, int iterations) {
  long target = src.bits() - mp::kGuardBits;
  Real accept = mp::two_pow(-target / 2);
  Real finish = mp::two_pow(-target);
  NewtonOutcome out;
  out.local = start;
  out.r = relation_residual(a, out.local);
  Complex origin = start.lambda();
  if (first) {
    try {
      LocalData cand = src.evaluate_from(out.local, *first);
      Residual rc = relation_residual(a, cand);
      if (rc.norm() < out.r.norm()) {
        out.local = std::move(cand);
        out.r = rc;
      }
    } catch (const Error&) {
    }
  }
  for (int it = 0; it < iterations; ++it) {
    const Residual& r = out.r;
    if (r.norm() <= finish * r.scale) break;
    Real den = mp::norm(r.dh) + mp::norm(r.d2h);
    if (den.is_zero()) break;
    Complex delta = -((mp::conj(r.dh) * r.h + mp::conj(r.d2h) * r.dh) / den);
    bool moved = false;
    Real t(1);
    for (int k = 0; k < 10; ++k, t /= 2) {
      Complex next = out.local.lambda() + delta * t;
      if (mp::abs(next - origin).to_double() > max_travel) continue;
      try {
        LocalData cand = src.evaluate_from(out.local, next);
        Residual rc = relation_residual(a, cand);
        if (rc.norm() < r.norm()) {
          out.local = std::move(cand);
          out.r = rc;
          moved = true;
          break;
        }
      } catch (const Error&) {
      }
    }
    if (!moved) break;
    if (mp::abs(delta * t) <= finish * mp::max(Real(1), mp::abs(out.local.lambda()))) break;
  }
  out.converged = out.r.norm() < accept * out.r.scale;
  return out;
}

struct Candidate {
  std::size_t node;
  long a1, a2;
  cd target;
};

std::string head_str(const std::vector<long>& head) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < head.size(); ++i) os << (i ? "," : "") << head[i];
  os << ')';
  return os.str();
}

bool hit_less(const TangencyHit& x, const TangencyHit& y) {
  if (x.a.head() != y.a.head()) return canonical_less(x.a.head(), y.a.head());
  if (x.lambda.re != y.lambda.re) return x.lambda.re < y.lambda.re;
  return x.lambda.im < y.lambda.im;
}

}  // namespace

const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::Analytic:
      return "analytic";
    case Provenance::SymbolicOracle:
      return "symbolic-oracle";
    case Provenance::Both:
      return "both";
  }
  return "";
}

Residual relation_residual(const RelationVector& a, const LocalData& local) {
  Residual r;
  const auto& b = local.basis;
  std::size_t n = a.n();
  if (local.sections.size() != n) throw DomainError("relation length does not match the number of sections");
  Real scale(1);
  for (std::size_t i = 0; i < n; ++i) {
    if (a.a[i] == 0) continue;
    const auto& s = local.sections[i];
    r.h += s.z * a.a[i];
    r.dh += s.deriv.dz * a.a[i];
    r.d2h += s.deriv.d2z * a.a[i];
    scale += (mp::abs(s.z) + mp::abs(s.deriv.dz)) * std::labs(a.a[i]);
  }
  long p = a.an1(), q = a.an2();
  r.h -= b.f * p + b.g * q;
  r.dh -= b.df * p + b.dg * q;
  r.d2h -= b.d2f * p + b.d2g * q;
  scale += (mp::abs(b.f) + mp::abs(b.df)) * std::labs(p) + (mp::abs(b.g) + mp::abs(b.dg)) * std::labs(q);
  r.scale = scale;
  return r;
}

void tangency_residual(const RelationVector& a, const LocalData& local, Complex& h, Complex& dh) {
  Residual r = relation_residual(a, local);
  h = r.h;
  dh = r.dh;
}

SeedGrid::SeedGrid(const LogSource& src, int per_side, int threads) {
  if (per_side < 2) throw DomainError("seed grid needs at least 2 points per side");
  const Disc& d = src.disc();
  spacing_ = 2 * d.radius / per_side;
  std::vector<std::pair<double, double>> pts;
  for (int j = 0; j < per_side; ++j)
    for (int i = 0; i < per_side; ++i) {
      double x = d.radius * ((2.0 * i + 1) / per_side - 1), y = d.radius * ((2.0 * j + 1) / per_side - 1);
      if (x * x + y * y <= d.radius * d.radius) pts.emplace_back(d.re + x, d.im + y);
    }
  std::vector<Node> nodes(pts.size());
  std::vector<std::string> errors(pts.size());
  std::vector<char> ok(pts.size(), 0);
  parallel_for(pts.size(), threads, src.bits(), [&](std::size_t k) {
    Complex lam(pts[k].first, pts[k].second);
    try {
      Node& nd = nodes[k];
      nd.local = src.evaluate(lam);
      const auto& b = nd.local.basis;
      nd.f = to_cd(b.f);
      nd.g = to_cd(b.g);
      nd.df = to_cd(b.df);
      nd.dg = to_cd(b.dg);
      nd.d2f = to_cd(b.d2f);
      nd.d2g = to_cd(b.d2g);
      for (const auto& s : nd.local.sections) {
        Real u, v;
        betti::betti_coords(s.z, b, u, v);
        nd.u.push_back(u.to_double());
        nd.v.push_back(v.to_double());
        nd.z.push_back(to_cd(s.z));
        nd.dz.push_back(to_cd(s.deriv.dz));
        nd.d2z.push_back(to_cd(s.deriv.d2z));
      }
      nd.rho = std::min(std::abs(to_cd(lam)), std::abs(to_cd(lam) - 1.0));
      ok[k] = 1;
    } catch (const Error& e) {
      errors[k] = std::string("seed ") + lam.str(8) + " skipped: " + e.what();
    }
  });
  for (std::size_t k = 0; k < pts.size(); ++k) {
    if (ok[k]) nodes_.push_back(std::move(nodes[k]));
    else skipped_.push_back(errors[k]);
  }
}

DetectResult find_tangential_points(const std::vector<long>& head, const LogSource& src, const SeedGrid& grid,
                                    const LogSource* verifier, const DetectorConfig& cfg) {
  mp::PrecisionScope scope(src.bits());
  DetectResult res;
  std::size_t n = head.size();
  if (n != src.size()) throw DomainError("relation length does not match the number of sections");
  double s = grid.spacing();
  double eps2 = s * s / 2;
  std::vector<Candidate> cands;
  const auto& nodes = grid.nodes();
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    const auto& nd = nodes[k];
    double U = 0, V = 0;
    for (std::size_t i = 0; i < n; ++i) {
      U += head[i] * nd.u[i];
      V += head[i] * nd.v[i];
    }
    long a1 = std::lround(U), a2 = std::lround(V);
    cd h = -double(a1) * nd.f - double(a2) * nd.g;
    cd dh = -double(a1) * nd.df - double(a2) * nd.dg;
    cd d2h = -double(a1) * nd.d2f - double(a2) * nd.d2g;
    for (std::size_t i = 0; i < n; ++i) {
      h += double(head[i]) * nd.z[i];
      dh += double(head[i]) * nd.dz[i];
      d2h += double(head[i]) * nd.d2z[i];
    }
    double den = std::norm(dh) + std::norm(d2h);
    if (den == 0) continue;
    cd delta = -(std::conj(dh) * h + std::conj(d2h) * dh) / den;
    if (std::abs(delta) > 2 * s) continue;
    double lin = std::sqrt(std::norm(h + dh * delta) + std::norm(dh + d2h * delta));
    double M = std::abs(d2h) * (1 + 3 / nd.rho);
    if (lin > cfg.kappa * M * eps2) continue;
    cands.push_back({k, a1, a2, to_cd(nd.local.lambda()) + delta});
  }

  long target = src.bits() - mp::kGuardBits;
  Real merge = mp::two_pow(-target / 3);
  struct Found {
    RelationVector a;
    LocalData local;
    Residual r;
  };
  std::vector<Found> found;
  bool boundary = false;
  for (const auto& c : cands) {
    bool dup = false;
    for (const auto& f : found)
      if (std::abs(to_cd(f.local.lambda()) - c.target) < s / 8) dup = true;
    if (dup) continue;
    RelationVector a;
    a.a = head;
    a.a.push_back(c.a1);
    a.a.push_back(c.a2);
    Complex first(c.target.real(), c.target.imag());
    NewtonOutcome o = newton(src, a, nodes[c.node].local, &first, 4 * s, cfg.newton_iterations);
    if (!o.converged) continue;
    if (!src.disc().contains(o.local.lambda())) {
      boundary = true;
      continue;
    }
    bool merged = false;
    for (const auto& f : found)
      if (mp::abs(f.local.lambda() - o.local.lambda()) < merge) merged = true;
    if (!merged) found.push_back({a, std::move(o.local), o.r});
  }
  if (boundary)
    res.warnings.push_back("possible boundary hit for a = " + head_str(head) + " (Newton converged outside the disc)");

  for (auto& f : found) {
    TangencyHit hit;
    if (cfg.reverify && verifier) {
      mp::PrecisionScope hi(verifier->bits());
      LocalData v;
      try {
        v = verifier->evaluate(f.local.lambda());
      } catch (const Error& e) {
        res.warnings.push_back(std::string("re-verification failed: ") + e.what());
        continue;
      }
      Complex w;
      for (std::size_t i = 0; i < n; ++i) w += v.sections[i].z * head[i];
      Real U, V;
      betti::betti_coords(w, v.basis, U, V);
      RelationVector a;
      a.a = head;
      a.a.push_back(mp::round(U).to_long());
      a.a.push_back(mp::round(V).to_long());
      NewtonOutcome o = newton(*verifier, a, v, nullptr, s, 12);
      if (o.r.norm() >= mp::two_pow(-target) * o.r.scale || !verifier->disc().contains(o.local.lambda())) {
        res.warnings.push_back("hit at " + f.local.lambda().str(12) + " for a = " + a.str() +
                               " did not re-verify at doubled precision");
        continue;
      }
      hit.lambda = o.local.lambda();
      hit.a = a;
      hit.res_h = mp::abs(o.r.h);
      hit.res_dh = mp::abs(o.r.dh);
      hit.multiplicity2 = true;
    } else {
      hit.lambda = f.local.lambda();
      hit.a = f.a;
      hit.res_h = mp::abs(f.r.h);
      hit.res_dh = mp::abs(f.r.dh);
      hit.multiplicity2 = true;
    }
    res.hits.push_back(std::move(hit));
  }
  std::sort(res.hits.begin(), res.hits.end(), hit_less);
  return res;
}

DetectResult find_tangential_points(const std::vector<long>& head, const LogSource& src, const DetectorConfig& cfg) {
  SeedGrid grid(src, cfg.grid, cfg.threads);
  std::unique_ptr<LogSource> ver;
  if (cfg.reverify) ver = src.at_precision(2 * (src.bits() - mp::kGuardBits) + mp::kGuardBits);
  DetectResult r = find_tangential_points(head, src, grid, ver.get(), cfg);
  r.warnings.insert(r.warnings.begin(), grid.skipped().begin(), grid.skipped().end());
  return r;
}

void check_not_identically_related(const LogSource& src, long T) {
  mp::PrecisionScope scope(src.bits());
  const Disc& d = src.disc();
  Complex c = d.center();
  std::vector<Complex> pts = {c, c + Complex(0.5 * d.radius, 0.0), c + Complex(-0.3 * d.radius, 0.4 * d.radius)};
  std::vector<std::vector<long>> common;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    betti::ThetaPoint th;
    try {
      th = betti::theta_map(src.evaluate(pts[k]));
    } catch (const Error&) {
      continue;
    }
    std::vector<std::vector<long>> heads;
    for (const auto& r : relation_candidates(th, T)) heads.push_back(r.head());
    if (k == 0) {
      common = heads;
    } else {
      std::vector<std::vector<long>> keep;
      for (const auto& h : common)
        if (std::find(heads.begin(), heads.end(), h) != heads.end()) keep.push_back(h);
      common = keep;
    }
  }
  if (!common.empty()) throw DomainError("section pair identically related: a = " + head_str(common.front()));
}

ScanResult scan_D_a(const LogSource& src, long T, const DetectorConfig& cfg) {
  if (T < 1) throw DomainError("scan: T must be positive");
  mp::PrecisionScope scope(src.bits());
  check_not_identically_related(src, T);
  ScanResult out;
  out.T = T;
  out.n = src.size();
  SeedGrid grid(src, cfg.grid, cfg.threads);
  out.grid_nodes = grid.nodes().size();
  out.warnings = grid.skipped();
  std::unique_ptr<LogSource> ver;
  if (cfg.reverify) ver = src.at_precision(2 * (src.bits() - mp::kGuardBits) + mp::kGuardBits);
  auto heads = enumerate_heads(src.size(), T);
  std::vector<DetectResult> per(heads.size());
  std::vector<std::string> failed(heads.size());
  DetectorConfig single = cfg;
  single.threads = 1;
  parallel_for(heads.size(), cfg.threads, src.bits(), [&](std::size_t i) {
    try {
      per[i] = find_tangential_points(heads[i], src, grid, ver.get(), single);
    } catch (const Error& e) {
      failed[i] = "a = " + head_str(heads[i]) + ": " + e.what();
    }
  });
  for (std::size_t i = 0; i < per.size(); ++i) {
    for (auto& h : per[i].hits) out.hits.push_back(std::move(h));
    for (auto& w : per[i].warnings) out.warnings.push_back(std::move(w));
    if (!failed[i].empty()) out.failures.push_back(std::move(failed[i]));
  }
  out.counts.assign(T, 0);
  for (const auto& h : out.hits)
    for (long k = h.a.norm(); k <= T; ++k) ++out.counts[k - 1];
  return out;
}

void attach_oracle(ScanResult& scan, const std::vector<std::vector<long>>& heads,
                   const std::vector<std::vector<Complex>>& roots, double radius) {
  Real rad(radius);
  for (std::size_t k = 0; k < heads.size(); ++k) {
    for (const auto& root : roots[k]) {
      bool matched = false;
      for (auto& h : scan.hits) {
        if (h.a.head() != heads[k]) continue;
        if (mp::abs(h.lambda - root) <= rad) {
          h.provenance = Provenance::Both;
          matched = true;
        }
      }
      if (!matched) {
        TangencyHit h;
        h.lambda = root;
        h.a.a = heads[k];
        h.a.a.push_back(0);
        h.a.a.push_back(0);
        h.provenance = Provenance::SymbolicOracle;
        scan.hits.push_back(h);
      }
    }
  }
  std::sort(scan.hits.begin(), scan.hits.end(), hit_less);
}

std::string scan_csv_header(std::size_t n) {
  std::ostringstream os;
  for (std::size_t i = 1; i <= n; ++i) os << 'a' << i << ',';
  os << "an1,an2,lambda_re,lambda_im,res_h,res_dh,provenance";
  return os.str();
}

std::string scan_csv(const ScanResult& scan, int digits) {
  std::ostringstream os;
  os << scan_csv_header(scan.n) << '\n';
  for (const auto& h : scan.hits) {
    for (long e : h.a.a) os << e << ',';
    os << h.lambda.re.str(digits) << ',' << h.lambda.im.str(digits) << ',' << h.res_h.str(3) << ','
       << h.res_dh.str(3) << ',' << to_string(h.provenance) << '\n';
  }
  return os.str();
}

}  // namespace bettimap::tangency
