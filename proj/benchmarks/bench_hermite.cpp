#include <benchmark/benchmark.h>

#include <random>

#include "hermitrig/eval.hpp"
#include "hermitrig/hermite.hpp"
#include "hermitrig/oracle.hpp"
#include "hermitrig/spectral.hpp"

using namespace hermitrig;

namespace {

HermiteSamples make_samples(int family, int n, int p, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    HermiteSamples samples;
    samples.grid = make_grid(family, n);
    samples.p = p;
    samples.rows.assign(static_cast<std::size_t>(p) + 1,
                        std::vector<double>(static_cast<std::size_t>(samples.grid.N), 0.0));
    for (auto& row : samples.rows) {
        for (double& v : row) {
            v = dist(rng);
        }
    }
    return samples;
}

std::vector<FourierLayer> layers_of(const HermiteSamples& samples) {
    const MeanReport report = center_rows(samples);
    std::vector<FourierLayer> layers;
    for (int m = 0; m <= samples.p; ++m) {
        layers.push_back(trig_interp_coeffs(report.centered_rows[static_cast<std::size_t>(m)],
                                            samples.grid, m));
    }
    return layers;
}

}  // namespace

static void BM_BuildHermite(benchmark::State& state) {
    const auto samples =
        make_samples(0, static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_hermite(samples));
    }
}
// Larger n x p combinations push w^p past what the solver's residual
// guarantee can promise in binary64 for random data, so stay inside it.
BENCHMARK(BM_BuildHermite)
    ->ArgsProduct({{4, 16, 64}, {1, 2}})
    ->ArgsProduct({{4, 16}, {4}})
    ->ArgNames({"n", "p"});

static void BM_ClosedFormP2(benchmark::State& state) {
    const auto samples = make_samples(0, static_cast<int>(state.range(0)), 2, 2);
    const auto layers = layers_of(samples);
    for (auto _ : state) {
        benchmark::DoNotOptimize(closed_form_p2(layers, samples.grid));
    }
}
BENCHMARK(BM_ClosedFormP2)->Arg(4)->Arg(16)->Arg(64)->ArgName("n");

static void BM_CollocationSolve(benchmark::State& state) {
    const auto samples = make_samples(0, static_cast<int>(state.range(0)), 2, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(collocation_solve(samples));
    }
}
BENCHMARK(BM_CollocationSolve)->Arg(2)->Arg(5)->Arg(10)->ArgName("n");

static void BM_EvaluateMany(benchmark::State& state) {
    const auto samples = make_samples(0, 16, 2, 4);
    const auto poly = build_hermite(samples);
    std::vector<double> ts(static_cast<std::size_t>(state.range(0)));
    for (std::size_t i = 0; i < ts.size(); ++i) {
        ts[i] = 6.28318530717958648 * static_cast<double>(i) / static_cast<double>(ts.size());
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(evaluate_many(poly, ts, 1));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EvaluateMany)->Arg(256)->Arg(2048)->ArgName("points");

BENCHMARK_MAIN();
