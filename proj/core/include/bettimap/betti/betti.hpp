#pragma once

#include <string>
#include <vector>

#include "bettimap/betti/pipeline.hpp"

namespace bettimap::betti {

struct BettiPair {
  Real u, v, du, dv;
};

// lambda followed by u1, v1, ..., un, vn, du1, dv1, ..., dun, dvn.
struct ThetaPoint {
  Complex at;
  std::vector<Real> coords;

  std::size_t sections() const { return coords.size() / 4; }
  const Real& u(std::size_t j) const { return coords[2 * j]; }
  const Real& v(std::size_t j) const { return coords[2 * j + 1]; }
  const Real& du(std::size_t j) const { return coords[2 * sections() + 2 * j]; }
  const Real& dv(std::size_t j) const { return coords[2 * sections() + 2 * j + 1]; }
};

// Reality tolerance 2^(-target/2) used for certification.
Real reality_tolerance();

// Real (u, v) with z = u f + v g; no lattice reduction. Throws on a
// degenerate basis or when an imaginary part exceeds the tolerance.
void betti_coords(const Complex& z, const periods::PeriodBasis& basis, Real& u, Real& v);

// (du, dv) solving dz - u df - v dg = du f + dv g.
void betti_derivatives(const Complex& z, const Complex& dz, const periods::PeriodBasis& basis, Real& du, Real& dv);

BettiPair betti_pair(const Complex& z, const Complex& dz, const periods::PeriodBasis& basis);

ThetaPoint theta_map(const LocalData& local);
ThetaPoint theta_map(const Pipeline& pipeline, const Complex& lambda);

// CSV header and row: lambda_re,lambda_im,u1,v1,...,du1,dv1,...
std::string theta_csv_header(std::size_t n);
std::string theta_csv_row(const ThetaPoint& p, int digits);

}  // namespace bettimap::betti
