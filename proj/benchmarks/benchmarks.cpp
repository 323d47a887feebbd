#include <benchmark/benchmark.h>

#include "coblab/deviations.hpp"
#include "coblab/expansion.hpp"
#include "coblab/spectral.hpp"

using namespace coblab;

namespace {

void BM_SampleLatin(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Rng rng(1);
    for (auto _ : state) benchmark::DoNotOptimize(sample_uniform(n, rng));
    state.SetItemsProcessed(state.iterations() * 2LL * n * n * n);
}
BENCHMARK(BM_SampleLatin)->Arg(10)->Arg(30)->Arg(100);

void BM_Permanent(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Rng rng(2);
    std::vector<std::vector<int>> m(n, std::vector<int>(n));
    for (auto& row : m)
        for (auto& x : row) x = rng.coin() ? 1 : 0;
    for (auto _ : state) benchmark::DoNotOptimize(permanent_exact(m));
}
BENCHMARK(BM_Permanent)->Arg(10)->Arg(14)->Arg(18);

void BM_H1Exact(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto complex = build_simplex_skeleton(n, 2);
    for (auto _ : state) benchmark::DoNotOptimize(h1_exact(complex, 1));
}
BENCHMARK(BM_H1Exact)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_H1ExactT2(benchmark::State& state) {
    const auto complex = build_T(2);
    for (auto _ : state) benchmark::DoNotOptimize(h1_exact(complex, 1));
}
BENCHMARK(BM_H1ExactT2)->Unit(benchmark::kMillisecond);

void BM_Spectrum(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto g = Graph::complete_bipartite(n, n);
    for (auto _ : state) benchmark::DoNotOptimize(spectral_gap(g));
}
BENCHMARK(BM_Spectrum)->Arg(50)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_CohomologyRank(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Rng rng(3);
    std::vector<LatinSquare> squares;
    for (int i = 0; i < 3; ++i) squares.push_back(sample_uniform(n, rng));
    const auto complex = build_Y_union(squares);
    for (auto _ : state) benchmark::DoNotOptimize(cohomology_rank(complex, 1));
}
BENCHMARK(BM_CohomologyRank)->Arg(10)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
