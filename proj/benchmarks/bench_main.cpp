#include <benchmark/benchmark.h>

#include <random>

#include "coopnoma/analytic.hpp"
#include "coopnoma/bessel.hpp"
#include "coopnoma/montecarlo.hpp"
#include "coopnoma/oma.hpp"
#include "coopnoma/scenario.hpp"

namespace {

using namespace coopnoma;

void BM_BesselK1(benchmark::State& state) {
    const double x = static_cast<double>(state.range(0)) / 100.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(bessel_k1(x));
    }
}
// Series branch, just past the switch, and deep in the continued fraction.
BENCHMARK(BM_BesselK1)->Arg(5)->Arg(150)->Arg(250)->Arg(5000);

void BM_PoutApprox(benchmark::State& state) {
    const auto cfg = builtin_scenario("case-b1")->cfg.with_snr_db(30.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(p_out_approx(cfg));
    }
}
BENCHMARK(BM_PoutApprox);

void BM_NomaLinkOutage(benchmark::State& state) {
    const auto cfg = builtin_scenario("case-b1")->cfg.with_snr_db(30.0);
    const NomaLink link(cfg);
    const ChannelSampler sampler(cfg.variances(), 1);
    std::uint64_t trial = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(link.outage(sampler(trial++)));
    }
}
BENCHMARK(BM_NomaLinkOutage);

void BM_EstimateOutage(benchmark::State& state) {
    const auto cfg = builtin_scenario("case-b1")->cfg.with_snr_db(30.0);
    const auto n = static_cast<std::uint64_t>(state.range(0));
    const auto workers = static_cast<unsigned>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(estimate_outage(cfg, n, 7, OutageVariant::Exact, workers));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_EstimateOutage)->Args({100000, 1})->Args({100000, 0})->Unit(benchmark::kMillisecond);

void BM_OptimizeLambda1(benchmark::State& state) {
    const OmaConfig ocfg{builtin_scenario("case-b1")->cfg.with_snr_db(30.0), 0.5};
    for (auto _ : state) {
        benchmark::DoNotOptimize(optimize_lambda1(ocfg, 0.01, 100000, 7));
    }
}
BENCHMARK(BM_OptimizeLambda1)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
