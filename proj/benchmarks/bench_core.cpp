#include <benchmark/benchmark.h>

#include "bettimap/betti/betti.hpp"
#include "bettimap/betti/pipeline.hpp"
#include "bettimap/divseq/divseq.hpp"
#include "bettimap/ellog/elliptic_log.hpp"
#include "bettimap/heights/heights.hpp"
#include "bettimap/legendre/curve.hpp"
#include "bettimap/mp/real.hpp"
#include "bettimap/periods/periods.hpp"
#include "bettimap/tangency/detector.hpp"
#include "bettimap/tangency/source.hpp"

using namespace bettimap;
using mp::Complex;
using mp::Real;

namespace {

const Disc kDisc{0.5, 0.0, 0.2};

void BM_PeriodFieldEvaluate(benchmark::State& st) {
  mp::PrecisionScope s(st.range(0));
  periods::PeriodField field(kDisc);
  Complex lam(0.55, 0.07);
  for (auto _ : st) benchmark::DoNotOptimize(field.evaluate(lam));
}
BENCHMARK(BM_PeriodFieldEvaluate)->Arg(160)->Arg(288);

void BM_EllipticLog(benchmark::State& st) {
  mp::PrecisionScope s(st.range(0));
  Complex lam(0.55, 0.07);
  auto b = periods::period_basis_at(lam);
  Complex x(2);
  legendre::CurvePoint p{x, mp::sqrt(legendre::curve_rhs(x, lam)), false};
  for (auto _ : st) benchmark::DoNotOptimize(ellog::elliptic_log(p, lam, b));
}
BENCHMARK(BM_EllipticLog)->Arg(160)->Arg(288);

void BM_ThetaMapTwoSections(benchmark::State& st) {
  mp::PrecisionScope s(st.range(0));
  betti::Pipeline pipe({legendre::Section::parse("2"), legendre::Section::parse("3")}, kDisc);
  Complex lam(0.55, 0.07);
  for (auto _ : st) benchmark::DoNotOptimize(betti::theta_map(pipe, lam));
}
BENCHMARK(BM_ThetaMapTwoSections)->Arg(160)->Arg(288);

void BM_SeedGrid(benchmark::State& st) {
  mp::PrecisionScope s(160);
  tangency::PipelineSource src({legendre::Section::parse("2"), legendre::Section::parse("3")}, kDisc, 160);
  for (auto _ : st) benchmark::DoNotOptimize(tangency::SeedGrid(src, int(st.range(0)), 1).nodes().size());
}
BENCHMARK(BM_SeedGrid)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_ScanPaperPair(benchmark::State& st) {
  mp::PrecisionScope s(160);
  tangency::PipelineSource src({legendre::Section::parse("2"), legendre::Section::parse("3")}, kDisc, 160);
  tangency::DetectorConfig cfg;
  for (auto _ : st) benchmark::DoNotOptimize(tangency::scan_D_a(src, st.range(0), cfg).hits.size());
}
BENCHMARK(BM_ScanPaperPair)->Arg(5)->Arg(10)->Unit(benchmark::kMillisecond)->Iterations(1);

void BM_TorsionLocus(benchmark::State& st) {
  auto P = legendre::Section::parse("l + 1");
  for (auto _ : st) benchmark::DoNotOptimize(divseq::torsion_locus(int(st.range(0)), P));
}
BENCHMARK(BM_TorsionLocus)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_CanonicalHeight(benchmark::State& st) {
  mp::PrecisionScope s(160);
  for (auto _ : st)
    benchmark::DoNotOptimize(heights::canonical_height(exact::Rational(2), exact::Rational(3), int(st.range(0))));
}
BENCHMARK(BM_CanonicalHeight)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
