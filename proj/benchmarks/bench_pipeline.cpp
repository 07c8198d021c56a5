// Microbenchmarks for the detection pipeline stages. The interesting shapes:
// kernel/scan/centering are O(n^2), the limit simulation depends only on
// (m, T, R), and a permuted rescan costs about one scan.

#include <benchmark/benchmark.h>

#include <numeric>
#include <random>

#include "edcp/edcp.hpp"

namespace {

using namespace edcp;

Signal bench_signal(Index n) {
    std::mt19937_64 eng(417);
    std::normal_distribution<double> normal(0.0, 1.0);
    RowMatrix data(n, 1);
    for (Index i = 0; i < n; ++i) {
        data(i, 0) = normal(eng) + (i >= n / 2 ? 1.0 : 0.0);
    }
    return Signal(std::move(data));
}

void BM_PairwiseKernel(benchmark::State& state) {
    Signal s = bench_signal(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(pairwise_kernel(s, {1.0}, kDefaultKernelCap, 1));
    }
}

void BM_Scan(benchmark::State& state) {
    KernelMatrix kernel = pairwise_kernel(bench_signal(state.range(0)), {1.0});
    for (auto _ : state) {
        benchmark::DoNotOptimize(scan(kernel).tStar());
    }
}

void BM_CenterGram(benchmark::State& state) {
    KernelMatrix kernel = pairwise_kernel(bench_signal(state.range(0)), {1.0});
    for (auto _ : state) {
        benchmark::DoNotOptimize(center_gram(kernel, 1));
    }
}

void BM_TopEigenvalues(benchmark::State& state) {
    CenteredGram gram = center_gram(pairwise_kernel(bench_signal(state.range(0)), {1.0}));
    for (auto _ : state) {
        benchmark::DoNotOptimize(top_eigenvalues(gram, state.range(1)));
    }
}

// The simulation cost must not depend on the signal length, only on (m, T, R).
void BM_SimulateSup(benchmark::State& state) {
    CenteredGram gram = center_gram(pairwise_kernel(bench_signal(state.range(0)), {1.0}));
    Spectrum spectrum = top_eigenvalues(gram, 50);
    SimConfig cfg{1000, 99, 11};
    for (auto _ : state) {
        benchmark::DoNotOptimize(simulate_sup(spectrum, cfg, 1));
    }
}

void BM_PermutedRescan(benchmark::State& state) {
    const Index n = state.range(0);
    KernelMatrix kernel = pairwise_kernel(bench_signal(n), {1.0});
    std::vector<Index> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), Index{0});
    std::mt19937_64 eng(5);
    for (auto _ : state) {
        std::shuffle(perm.begin(), perm.end(), eng);
        benchmark::DoNotOptimize(scan_permuted(kernel, perm).tStar());
    }
}

void BM_AsymptoticTest(benchmark::State& state) {
    Signal s = bench_signal(state.range(0));
    SimConfig cfg{1000, 499, 23};
    for (auto _ : state) {
        benchmark::DoNotOptimize(asymptotic_test(s, {1.0}, 50, cfg, 0.05));
    }
}

void BM_DetectLong(benchmark::State& state) {
    Signal s = bench_signal(state.range(0));
    SimConfig cfg{1000, 499, 31};
    for (auto _ : state) {
        benchmark::DoNotOptimize(detect_long(s, {1.0}, 50, cfg, 0.05));
    }
}

} // namespace

BENCHMARK(BM_PairwiseKernel)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Scan)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CenterGram)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TopEigenvalues)->Args({500, 50})->Args({2000, 50})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SimulateSup)->Arg(1000)->Arg(8000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PermutedRescan)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AsymptoticTest)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DetectLong)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
