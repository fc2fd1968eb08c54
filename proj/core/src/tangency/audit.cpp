#include "bettimap/tangency/audit.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "bettimap/betti/betti.hpp"
#include "bettimap/tangency/intlattice.hpp"

namespace bettimap::tangency {

double generator_bound(const AuditConfig& cfg, int d, double h_lambda, double q, std::size_t n) {
  double nn = double(n);
  return cfg.delta1 * std::pow(double(d), cfg.delta2) * std::pow(h_lambda + 1, 2 * nn) * std::pow(q, (nn - 1) / 2);
}

AuditReport small_generator_audit(const TangencyHit& hit, const LogSource& src, int degree, double h_lambda, double q,
                                  const AuditConfig& cfg) {
  AuditReport r;
  r.n = src.size();
  r.degree = degree;
  r.h_lambda = h_lambda;
  r.q = q;
  r.bound = generator_bound(cfg, degree, h_lambda, q, r.n);
  long search = cfg.search_bound > 0 ? cfg.search_bound : std::max<long>(2, 2 * hit.a.norm());
  auto theta = betti::theta_map(src.evaluate(hit.lambda));
  auto L = relation_lattice(theta, RelationLattice::Kind::Full, search);
  auto Ls = relation_lattice(theta, RelationLattice::Kind::Singular, search);
  r.rank_full = L.rank();
  r.rank_singular = Ls.rank();
  if (r.rank_full != r.rank_singular) {
    r.note = "corollary inapplicable";
    return r;
  }
  r.applicable = true;
  if (Ls.rank() > 0) {
    for (const auto& g : lll_reduce(Ls.generators)) {
      long m = 0;
      for (const auto& e : g) m = std::max(m, long(exact::Integer(abs(e)).get_si()));
      r.generator_norms.push_back(m);
      r.max_norm = std::max(r.max_norm, m);
    }
  }
  r.satisfied = double(r.max_norm) <= r.bound;
  r.note = r.satisfied ? "bound satisfied" : "bound violated";
  return r;
}

std::string AuditReport::json() const {
  std::ostringstream os;
  os.precision(17);
  os << "{\"applicable\": " << (applicable ? "true" : "false") << ", \"note\": \"" << note
     << "\", \"rank_L\": " << rank_full << ", \"rank_Lsing\": " << rank_singular << ", \"n\": " << n
     << ", \"degree\": " << degree << ", \"h_lambda\": " << h_lambda << ", \"q\": " << q << ", \"bound\": " << bound
     << ", \"generator_norms\": [";
  for (std::size_t i = 0; i < generator_norms.size(); ++i) os << (i ? ", " : "") << generator_norms[i];
  os << "], \"max_norm\": " << max_norm << ", \"satisfied\": " << (satisfied ? "true" : "false") << '}';
  return os.str();
}

}  // namespace bettimap::tangency
