#include <benchmark/benchmark.h>

#include <random>

#include "wlm/grid.hpp"
#include "wlm/kernels.hpp"
#include "wlm/reference.hpp"

namespace {

wlm::GridD random_grid(int resolution) {
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    wlm::GridD f(resolution);
    for (double& v : f.values) v = dist(rng);
    return f;
}

void BM_fwht(benchmark::State& state) {
    const wlm::GridD f = random_grid(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(wlm::fwht(f));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_fwht)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMicrosecond);

void BM_fwht_serial(benchmark::State& state) {
    const wlm::GridD f = random_grid(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(wlm::ref::fwht_serial(f));
}
BENCHMARK(BM_fwht_serial)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMicrosecond);

void BM_convolve_spectral(benchmark::State& state) {
    const int N = static_cast<int>(state.range(0));
    const wlm::GridD f = random_grid(N);
    const wlm::GridD g = wlm::norlund_log_kernel<double>((1uLL << N) - 1, N);
    for (auto _ : state) benchmark::DoNotOptimize(wlm::xor_convolve(f, g));
}
BENCHMARK(BM_convolve_spectral)->Arg(8)->Arg(10)->Unit(benchmark::kMicrosecond);

void BM_convolve_naive(benchmark::State& state) {
    const int N = static_cast<int>(state.range(0));
    const wlm::GridD f = random_grid(N);
    const wlm::GridD g = wlm::norlund_log_kernel<double>((1uLL << N) - 1, N);
    for (auto _ : state) benchmark::DoNotOptimize(wlm::ref::naive_xor_convolve(f, g));
}
BENCHMARK(BM_convolve_naive)->Arg(8)->Arg(10)->Unit(benchmark::kMicrosecond);

void BM_kernel_spectral(benchmark::State& state) {
    const std::uint64_t n = static_cast<std::uint64_t>(state.range(0));
    const int N = wlm::order(wlm::index_t(static_cast<unsigned long>(n))) + 1;
    for (auto _ : state) benchmark::DoNotOptimize(wlm::norlund_log_kernel<double>(n, N));
}
BENCHMARK(BM_kernel_spectral)->Arg(64)->Arg(512)->Unit(benchmark::kMicrosecond);

void BM_kernel_naive(benchmark::State& state) {
    const std::uint64_t n = static_cast<std::uint64_t>(state.range(0));
    const int N = wlm::order(wlm::index_t(static_cast<unsigned long>(n))) + 1;
    std::vector<std::pair<std::uint64_t, double>> terms;
    for (std::uint64_t k = 1; k < n; ++k) terms.emplace_back(k, 1.0 / static_cast<double>(n - k));
    for (auto _ : state) benchmark::DoNotOptimize(wlm::ref::naive_kernel_sum(terms, N));
}
BENCHMARK(BM_kernel_naive)->Arg(64)->Arg(512)->Unit(benchmark::kMicrosecond);

void BM_exact_decompose(benchmark::State& state) {
    const std::uint64_t n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(wlm::decompose<mpq_class>(n));
}
BENCHMARK(BM_exact_decompose)->Arg(100)->Arg(255)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
