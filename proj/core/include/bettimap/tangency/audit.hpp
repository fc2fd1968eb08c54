#pragma once

#include <string>
#include <vector>

#include "bettimap/tangency/detector.hpp"
#include "bettimap/tangency/relations.hpp"
#include "bettimap/tangency/source.hpp"

namespace bettimap::tangency {

struct AuditConfig {
  double delta1 = 1.0;
  double delta2 = 10.0;
  long search_bound = 0;  // 0: twice the norm of the hit's relation
};

struct AuditReport {
  bool applicable = false;
  std::string note;
  std::size_t rank_full = 0, rank_singular = 0;
  std::size_t n = 0;
  int degree = 1;
  double h_lambda = 0, q = 1;
  double bound = 0;
  std::vector<long> generator_norms;  // LLL-reduced generators of L_sing
  long max_norm = 0;
  bool satisfied = false;

  std::string json() const;
};

// delta1 * d^delta2 * (h + 1)^(2n) * q^((n-1)/2).
double generator_bound(const AuditConfig& cfg, int d, double h_lambda, double q, std::size_t n);

// Rebuilds L and L_sing at the hit and compares the largest LLL-reduced
// generator of L_sing with the bound. A rank mismatch yields a report marked
// "corollary inapplicable".
AuditReport small_generator_audit(const TangencyHit& hit, const LogSource& src, int degree, double h_lambda, double q,
                                  const AuditConfig& cfg = {});

}  // namespace bettimap::tangency
