#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "bettimap/betti/pipeline.hpp"

namespace bettimap::tangency {

using betti::LocalData;
using mp::Complex;
using mp::Real;

// Where the detector gets periods and logs from. Implementations are
// immutable after construction and safe to share between threads.
class LogSource {
 public:
  virtual ~LogSource() = default;
  virtual std::size_t size() const = 0;
  virtual const Disc& disc() const = 0;
  virtual long bits() const = 0;
  virtual LocalData evaluate(const Complex& lambda) const = 0;
  // Logs pinned to the first-order prediction from prev.
  virtual LocalData evaluate_from(const LocalData& prev, const Complex& lambda) const = 0;
  // Same family at another working precision.
  virtual std::unique_ptr<LogSource> at_precision(long bits) const = 0;
};

class PipelineSource : public LogSource {
 public:
  // Builds the pipeline at the given working precision.
  PipelineSource(std::vector<legendre::Section> sections, const Disc& disc, long bits);

  std::size_t size() const override { return pipeline_.size(); }
  const Disc& disc() const override { return pipeline_.disc(); }
  long bits() const override { return pipeline_.bits(); }
  LocalData evaluate(const Complex& lambda) const override { return pipeline_.evaluate(lambda); }
  LocalData evaluate_from(const LocalData& prev, const Complex& lambda) const override {
    return pipeline_.evaluate_from(prev, lambda);
  }
  std::unique_ptr<LogSource> at_precision(long bits) const override;
  const betti::Pipeline& pipeline() const { return pipeline_; }

 private:
  static betti::Pipeline build(std::vector<legendre::Section> sections, const Disc& disc, long bits);
  betti::Pipeline pipeline_;
};

// Test hook: periods and logs given by closed-form functions of lambda.
struct FunctionModel {
  // Fills f, g and their first two derivatives at lambda.
  std::function<void(const Complex& lambda, periods::PeriodBasis& basis)> periods;
  // z, dz, d2z of each section.
  std::vector<std::function<void(const Complex& lambda, Complex& z, Complex& dz, Complex& d2z)>> logs;
};

class FunctionLogSource : public LogSource {
 public:
  FunctionLogSource(FunctionModel model, const Disc& disc, long bits);

  std::size_t size() const override { return model_.logs.size(); }
  const Disc& disc() const override { return disc_; }
  long bits() const override { return bits_; }
  LocalData evaluate(const Complex& lambda) const override;
  LocalData evaluate_from(const LocalData& prev, const Complex& lambda) const override;
  std::unique_ptr<LogSource> at_precision(long bits) const override;

 private:
  FunctionModel model_;
  Disc disc_;
  long bits_;
};

}  // namespace bettimap::tangency
