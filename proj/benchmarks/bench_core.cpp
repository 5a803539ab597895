#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "rankin/bounds.hpp"
#include "rankin/family.hpp"
#include "rankin/io.hpp"
#include "rankin/optimizer.hpp"
#include "rankin/verify.hpp"

namespace {

rankin::VectorFamily make_family(std::size_t n, std::size_t d) {
    std::mt19937_64 rng(1234);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<double> data(n * d);
    for (auto& x : data) x = gauss(rng);
    return rankin::VectorFamily(rankin::counting_space(n), d, std::move(data),
                                rankin::Normalization::renormalize);
}

void BM_Coherence(benchmark::State& state) {
    const auto fam = make_family(state.range(0), 8);
    for (auto _ : state) {
        benchmark::DoNotOptimize(fam.coherence());
    }
}
BENCHMARK(BM_Coherence)->Arg(16)->Arg(64)->Arg(256);

void BM_RankinBound(benchmark::State& state) {
    const auto fam = make_family(state.range(0), 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(rankin::rankin_bound(fam.space()));
    }
}
BENCHMARK(BM_RankinBound)->Arg(64)->Arg(1024);

void BM_ProofDecomposition(benchmark::State& state) {
    const auto fam = make_family(state.range(0), 8);
    for (auto _ : state) {
        benchmark::DoNotOptimize(rankin::proof_decomposition(fam));
    }
}
BENCHMARK(BM_ProofDecomposition)->Arg(16)->Arg(64);

void BM_SmoothedObjective(benchmark::State& state) {
    const auto fam = make_family(state.range(0), 8);
    for (auto _ : state) {
        benchmark::DoNotOptimize(rankin::smoothed_objective(fam, 0.1));
    }
}
BENCHMARK(BM_SmoothedObjective)->Arg(8)->Arg(32);

void BM_OptimizerRestart(benchmark::State& state) {
    rankin::OptimizerConfig cfg;
    cfg.restarts = 1;
    cfg.max_iters = 200;
    cfg.seed = 7;
    const auto space = rankin::counting_space(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            rankin::minimize_coherence(space, state.range(0) - 1, cfg));
    }
}
BENCHMARK(BM_OptimizerRestart)->Arg(4)->Arg(8);

void BM_FamilyRoundTrip(benchmark::State& state) {
    const auto fam = make_family(state.range(0), 8);
    for (auto _ : state) {
        const auto text = rankin::io::write_family(fam);
        benchmark::DoNotOptimize(
            rankin::io::read_family(text, rankin::Normalization::none));
    }
}
BENCHMARK(BM_FamilyRoundTrip)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
