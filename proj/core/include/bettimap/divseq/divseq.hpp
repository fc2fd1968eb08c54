#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bettimap/disc.hpp"
#include "bettimap/exact/poly.hpp"
#include "bettimap/legendre/section.hpp"

namespace bettimap::divseq {

using exact::RatPoly;
using mp::Complex;

struct Place {
  RatPoly poly;  // monic, irreducible over Q
  int mult = 0;
};

// Effective divisor on the lambda-line minus {0, 1, infinity}. Places over
// lambda = 0 and lambda = 1 are kept apart in `excluded`; `notes` records the
// edge-case conventions applied while building it.
struct BaseDivisor {
  std::vector<Place> entries;  // canonical order of the place polynomials
  std::vector<Place> excluded;
  std::vector<std::string> notes;

  int multiplicity(const RatPoly& place) const;
  // [{"place": "...", "mult": k}, ...] with the variable written as l.
  std::string json() const;
};

bool is_reduced(const BaseDivisor& d);
// a <= b entrywise.
bool divisor_leq(const BaseDivisor& a, const BaseDivisor& b);

// Places where nP = O. Throws DomainError "Silverman hypothesis violated"
// when P is identically n-torsion.
BaseDivisor torsion_locus(int n, const legendre::Section& P);

// Places where nP = Q, with intersection multiplicities. y-signs are compared
// numerically at `bits` (doubled internally) using each section's branch.
BaseDivisor dnpq_divisor(int n, const legendre::Section& P, const legendre::Section& Q, long bits = 128);

struct APStructure {
  std::vector<long> exceptional;
  std::vector<std::pair<long, long>> progressions;  // (start, modulus)
  long n_max = 0;

  bool contains(long n) const;
  std::string json() const;
};

// Finite set plus progressions reproducing raw on [1, n_max]; the modulus is
// the smallest m <= n_max/4 that makes membership periodic on the upper half.
APStructure fit_progressions(const std::vector<long>& raw, long n_max);

struct XiReport {
  std::vector<BaseDivisor> divisors;  // D_{nP,Q} for n = 1..n_max
  std::vector<long> raw;
  APStructure ap;
};

XiReport xi_structure(const legendre::Section& P, const legendre::Section& Q, long n_max, long bits = 128);

// Polynomial in lambda whose roots (with multiplicity) are the places where
// mP = O away from the 2-torsion and pole loci of P: fhat_m for X = x(P).
RatPoly torsion_polynomial(int m, const legendre::Section& P);

// Roots in the disc of gcd(T, T') for T = torsion_polynomial(m, P), i.e. the
// parameters where mP = O with multiplicity >= 2; parameters where y(P) = 0
// or x(P) has a pole are left out. Sorted by (re, im).
std::vector<Complex> tangency_oracle_roots(int m, const legendre::Section& P, const Disc& disc);

}  // namespace bettimap::divseq
