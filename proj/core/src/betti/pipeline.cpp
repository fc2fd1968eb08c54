#include "bettimap/betti/pipeline.hpp"

#include "bettimap/error.hpp"

namespace bettimap::betti {

Pipeline::Pipeline(std::vector<legendre::Section> sections, const Disc& disc)
    : sections_(std::move(sections)), field_(disc) {
  if (sections_.empty()) throw DomainError("no sections given");
  Complex c = disc.center();
  for (std::size_t j = 0; j < sections_.size(); ++j) {
    if (sections_[j].is_identity())
      throw DomainError("section " + std::to_string(j + 1) + " is the zero section (x = infinity)");
    numeric_.emplace_back(sections_[j]);
  }
  check_good(c);
  for (const auto& ns : numeric_) y_center_.push_back(ns.y(c));
  step_ = ellog::default_step(disc.radius);
}

void Pipeline::check_good(const Complex& lambda) const {
  legendre::check_lambda(lambda);
  Real tol = mp::two_pow(-mp::target_bits() / 2);
  for (std::size_t j = 0; j < numeric_.size(); ++j) {
    std::string who = "section " + std::to_string(j + 1);
    Complex x = numeric_[j].x(lambda);
    if (!x.re.is_finite() || !x.im.is_finite() || mp::abs(x) > mp::two_pow(mp::target_bits() / 2))
      throw DomainError(who + " outside good locus: x = infinity at lambda = " + lambda.str(12));
    if (numeric_[j].two_torsion()) continue;
    Complex y2 = numeric_[j].y_squared(lambda);
    if (mp::abs(y2) <= tol * mp::max(Real(1), mp::abs(x) * mp::abs(x) * mp::abs(x))) {
      const char* which = mp::abs(x) < Real(0.5) ? "0" : (mp::abs(x - 1) < mp::abs(x - lambda) ? "1" : "lambda");
      throw DomainError(who + " outside good locus: x = " + which + " at lambda = " + lambda.str(12));
    }
  }
}

LocalData Pipeline::assemble(const Complex& lambda, const std::vector<Complex>& ys,
                             const std::vector<Complex>* near) const {
  mp::PrecisionScope scope(field_.bits());
  LocalData out;
  out.basis = field_.evaluate(lambda);
  out.sections.reserve(numeric_.size());
  for (std::size_t j = 0; j < numeric_.size(); ++j)
    out.sections.push_back(ellog::section_local(numeric_[j], out.basis, ys[j], near ? &(*near)[j] : nullptr, step_));
  return out;
}

LocalData Pipeline::evaluate(const Complex& lambda) const {
  mp::PrecisionScope scope(field_.bits());
  check_good(lambda);
  std::vector<Complex> ys;
  Complex c = field_.disc().center();
  for (std::size_t j = 0; j < numeric_.size(); ++j) ys.push_back(numeric_[j].continue_y(c, y_center_[j], lambda));
  return assemble(lambda, ys, nullptr);
}

LocalData Pipeline::evaluate_from(const LocalData& prev, const Complex& lambda) const {
  mp::PrecisionScope scope(field_.bits());
  check_good(lambda);
  std::vector<Complex> ys, near;
  Complex d = lambda - prev.lambda();
  for (std::size_t j = 0; j < numeric_.size(); ++j) {
    const auto& s = prev.sections[j];
    Complex y = numeric_[j].continue_y(prev.lambda(), s.y, lambda);
    if (!numeric_[j].two_torsion()) {
      // Re-root at the working precision (prev may be coarser).
      Complex w = mp::sqrt(numeric_[j].y_squared(lambda));
      y = mp::norm(w - y) <= mp::norm(w + y) ? w : -w;
    }
    ys.push_back(y);
    near.push_back(s.z + s.deriv.dz * d);
  }
  return assemble(lambda, ys, &near);
}

}  // namespace bettimap::betti
