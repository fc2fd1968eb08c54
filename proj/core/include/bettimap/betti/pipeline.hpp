#pragma once

#include <vector>

#include "bettimap/disc.hpp"
#include "bettimap/ellog/elliptic_log.hpp"
#include "bettimap/legendre/section.hpp"
#include "bettimap/periods/periods.hpp"

namespace bettimap::betti {

using mp::Complex;
using mp::Real;

// Everything known about the family at one lambda: periods with two
// derivatives and, per section, y, z, dz/dlambda and d2z/dlambda2.
struct LocalData {
  periods::PeriodBasis basis;
  std::vector<ellog::SectionLocal> sections;

  const Complex& lambda() const { return basis.lambda; }
};

// Sections plus a period field on a disc, evaluated at a fixed precision.
// y is continued along the segment from the disc centre (itself reached from
// each section's reference point), so every branch is a function of lambda
// alone. Fresh evaluations return reduced logs; evaluations continued from a
// previous point pin each log to its first-order prediction.
class Pipeline {
 public:
  // Uses the calling thread's precision.
  Pipeline(std::vector<legendre::Section> sections, const Disc& disc);

  std::size_t size() const { return numeric_.size(); }
  const Disc& disc() const { return field_.disc(); }
  long bits() const { return field_.bits(); }
  const periods::PeriodField& field() const { return field_; }
  const std::vector<legendre::Section>& sections() const { return sections_; }

  // Throws DomainError naming the first violated good-locus condition.
  void check_good(const Complex& lambda) const;

  LocalData evaluate(const Complex& lambda) const;
  LocalData evaluate_from(const LocalData& prev, const Complex& lambda) const;

 private:
  LocalData assemble(const Complex& lambda, const std::vector<Complex>& ys, const std::vector<Complex>* near) const;

  std::vector<legendre::Section> sections_;
  std::vector<legendre::NumericSection> numeric_;
  periods::PeriodField field_;
  std::vector<Complex> y_center_;
  Real step_;
};

}  // namespace bettimap::betti
