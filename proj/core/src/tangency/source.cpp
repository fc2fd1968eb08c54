#include "bettimap/tangency/source.hpp"

namespace bettimap::tangency {

betti::Pipeline PipelineSource::build(std::vector<legendre::Section> sections, const Disc& disc, long bits) {
  mp::PrecisionScope scope(bits);
  return betti::Pipeline(std::move(sections), disc);
}

PipelineSource::PipelineSource(std::vector<legendre::Section> sections, const Disc& disc, long bits)
    : pipeline_(build(std::move(sections), disc, bits)) {}

std::unique_ptr<LogSource> PipelineSource::at_precision(long bits) const {
  return std::make_unique<PipelineSource>(pipeline_.sections(), pipeline_.disc(), bits);
}

FunctionLogSource::FunctionLogSource(FunctionModel model, const Disc& disc, long bits)
    : model_(std::move(model)), disc_(disc), bits_(bits) {}

LocalData FunctionLogSource::evaluate(const Complex& lambda) const {
  mp::PrecisionScope scope(bits_);
  LocalData out;
  out.basis.lambda = lambda;
  model_.periods(lambda, out.basis);
  out.basis.lambda = lambda;
  for (const auto& log : model_.logs) {
    ellog::SectionLocal s;
    log(lambda, s.z, s.deriv.dz, s.deriv.d2z);
    s.deriv.convergence_ratio = Real(4);
    out.sections.push_back(s);
  }
  return out;
}

LocalData FunctionLogSource::evaluate_from(const LocalData&, const Complex& lambda) const {
  return evaluate(lambda);
}

std::unique_ptr<LogSource> FunctionLogSource::at_precision(long bits) const {
  return std::make_unique<FunctionLogSource>(model_, disc_, bits);
}

}  // namespace bettimap::tangency
