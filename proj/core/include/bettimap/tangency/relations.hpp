#pragma once

#include <string>
#include <vector>

#include "bettimap/betti/betti.hpp"
#include "bettimap/tangency/intlattice.hpp"

namespace bettimap::tangency {

using mp::Complex;
using mp::Real;

// (a1, ..., an, a_{n+1}, a_{n+2}) for sum a_i z_i = a_{n+1} f + a_{n+2} g.
struct RelationVector {
  std::vector<long> a;

  std::size_t n() const { return a.size() - 2; }
  // max |a_i| over the first n coordinates
  long norm() const;
  std::vector<long> head() const { return std::vector<long>(a.begin(), a.end() - 2); }
  long an1() const { return a[a.size() - 2]; }
  long an2() const { return a[a.size() - 1]; }
  std::string str() const;
};

// Canonical order: by norm, then lexicographic on all coordinates.
bool canonical_less(const std::vector<long>& x, const std::vector<long>& y);

// All a in Z^n, 0 < |a| <= bound, first nonzero coordinate positive, in
// canonical order.
std::vector<std::vector<long>> enumerate_heads(std::size_t n, long bound);

struct RelationLattice {
  enum class Kind { Full, Singular };
  IntMatrix generators;  // Hermite basis in Z^n
  std::size_t rank() const { return generators.size(); }
  Kind kind = Kind::Full;
};

// Rounding tolerance for integer candidates: 1e-8 at 128 target bits, scaled
// with precision.
Real relation_tolerance();

// Lattice of a in Z^n with sum a_i (u_i, v_i) in Z^2 (Full) and additionally
// sum a_i (du_i, dv_i) = 0 (Singular), among vectors of norm at most bound.
// Found by LLL on the weighted real data, then verified.
RelationLattice relation_lattice(const betti::ThetaPoint& theta, RelationLattice::Kind kind, long bound);

// Every a with |a| <= T whose combination of Betti pairs is within tolerance
// of an integer pair, with (a_{n+1}, a_{n+2}) attached. Up to sign, canonical
// order.
std::vector<RelationVector> relation_candidates(const betti::ThetaPoint& theta, long T);

// True iff Q L_sing intersected with L equals L_sing. Throws DomainError
// "not a sublattice" when L_sing is not contained in L.
bool saturation_check(const RelationLattice& L, const RelationLattice& Lsing);

}  // namespace bettimap::tangency
