// Microbenchmarks for the expensive exact-arithmetic paths.  These guard the
// acceptance-level runtime budgets (full spectrum well under 100 ms, replay
// under 1 s) with much finer resolution.

#include <benchmark/benchmark.h>

#include "drg/array.hpp"
#include "drg/bounds.hpp"
#include "drg/oracle.hpp"
#include "drg/report.hpp"
#include "drg/spectrum.hpp"

namespace {

const drg::DerivedParameters& target_parameters() {
  static const drg::DerivedParameters d =
      drg::derive_parameters(drg::parse_array("{80,54,12;1,6,60}"));
  return d;
}

void BM_spectrum_certification(benchmark::State& state) {
  const auto& d = target_parameters();
  for (auto _ : state) {
    drg::SpectrumOutcome out = drg::compute_spectrum(d);
    benchmark::DoNotOptimize(out);
  }
}
BENCHMARK(BM_spectrum_certification);

void BM_quotient_scan_55_pairs(benchmark::State& state) {
  const drg::AlgebraicNumber threshold{drg::Rat(-3)};
  for (auto _ : state) {
    drg::QuotientScanResult scan =
        drg::quotient_scan(drg::Int(5), drg::Int(11), drg::Int(20), threshold);
    benchmark::DoNotOptimize(scan);
  }
}
BENCHMARK(BM_quotient_scan_55_pairs);

void BM_full_pipeline_target(benchmark::State& state) {
  const drg::IntersectionArray arr = drg::parse_array("{80,54,12;1,6,60}");
  for (auto _ : state) {
    drg::FeasibilityReport rep = drg::run_all_checks(arr);
    benchmark::DoNotOptimize(rep);
  }
}
BENCHMARK(BM_full_pipeline_target);

void BM_replay_worked_example(benchmark::State& state) {
  for (auto _ : state) {
    drg::ReplayResult res = drg::replay_paper();
    benchmark::DoNotOptimize(res);
  }
}
BENCHMARK(BM_replay_worked_example);

void BM_brute_spectrum_petersen(benchmark::State& state) {
  const drg::SmallGraph g = drg::build_named_graph("petersen");
  for (auto _ : state) {
    drg::Spectrum s = drg::brute_spectrum(g);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_brute_spectrum_petersen);

}  // namespace

BENCHMARK_MAIN();
