#pragma once

#include <complex>
#include <string>
#include <vector>

#include "bettimap/tangency/relations.hpp"
#include "bettimap/tangency/source.hpp"

namespace bettimap::tangency {

struct DetectorConfig {
  int grid = 32;          // seed points per side of the disc's bounding square
  double kappa = 16.0;    // screening slack
  int newton_iterations = 40;
  int threads = 1;
  bool reverify = true;   // confirm hits at doubled precision
};

enum class Provenance { Analytic, SymbolicOracle, Both };
const char* to_string(Provenance p);

struct TangencyHit {
  Complex lambda;
  RelationVector a;
  Real res_h, res_dh;
  bool multiplicity2 = false;
  Provenance provenance = Provenance::Analytic;
};

struct Residual {
  Complex h, dh, d2h;
  Real scale;  // size of the terms, for relative acceptance
  Real norm() const { return mp::sqrt(mp::norm(h) + mp::norm(dh)); }
};

// h = sum a_i z_i - a_{n+1} f - a_{n+2} g and its first two derivatives.
Residual relation_residual(const RelationVector& a, const LocalData& local);
void tangency_residual(const RelationVector& a, const LocalData& local, Complex& h, Complex& dh);

// Evaluated seed grid, shared by every relation vector of a scan.
class SeedGrid {
 public:
  struct Node {
    LocalData local;
    std::vector<double> u, v;
    std::complex<double> f, g, df, dg, d2f, d2g;
    std::vector<std::complex<double>> z, dz, d2z;
    double rho = 0;  // distance to {0, 1}
  };

  SeedGrid(const LogSource& src, int per_side, int threads);
  const std::vector<Node>& nodes() const { return nodes_; }
  double spacing() const { return spacing_; }
  const std::vector<std::string>& skipped() const { return skipped_; }

 private:
  std::vector<Node> nodes_;
  double spacing_ = 0;
  std::vector<std::string> skipped_;
};

struct DetectResult {
  std::vector<TangencyHit> hits;
  std::vector<std::string> warnings;
};

// Tangential points of the relation with leading coordinates `head` in the
// source's disc. `verifier` (may be null) is the same family at doubled
// precision.
DetectResult find_tangential_points(const std::vector<long>& head, const LogSource& src, const SeedGrid& grid,
                                    const LogSource* verifier, const DetectorConfig& cfg);
DetectResult find_tangential_points(const std::vector<long>& head, const LogSource& src,
                                    const DetectorConfig& cfg = {});

// Throws DomainError "section pair identically related" when some a with
// |a| <= T is a relation at the centre and at two further points of the disc.
void check_not_identically_related(const LogSource& src, long T);

struct ScanResult {
  long T = 0;
  std::size_t n = 0;
  std::vector<TangencyHit> hits;  // canonical order of a, then lambda
  std::vector<long> counts;       // counts[k-1] = number of hits with |a| <= k
  std::vector<std::string> warnings;
  std::vector<std::string> failures;  // relation vectors whose search threw
  std::size_t grid_nodes = 0;
};

ScanResult scan_D_a(const LogSource& src, long T, const DetectorConfig& cfg);

// Marks hits matching oracle roots (within radius) as Both and appends
// unmatched oracle roots as SymbolicOracle entries. roots[k] belongs to heads[k].
void attach_oracle(ScanResult& scan, const std::vector<std::vector<long>>& heads,
                   const std::vector<std::vector<Complex>>& roots, double radius);

std::string scan_csv_header(std::size_t n);
std::string scan_csv(const ScanResult& scan, int digits);

}  // namespace bettimap::tangency
