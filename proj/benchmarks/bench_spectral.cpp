#include <benchmark/benchmark.h>

#include "regconn/bounds.hpp"
#include "regconn/generators.hpp"
#include "regconn/linalg.hpp"
#include "regconn/srg.hpp"

namespace {

using namespace regconn;

void BM_JacobiAdjacency(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto a = adjacency_matrix(random_connected_regular(n, 4, 17));
    for (auto _ : state) {
        auto spec = eigenvalues(a);
        benchmark::DoNotOptimize(spec.values.data());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_JacobiAdjacency)->RangeMultiplier(2)->Range(8, 64)->Complexity();

void BM_Rho(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto g = random_connected_regular(n, 6, 23);
    for (auto _ : state) {
        auto report = rho(g);
        benchmark::DoNotOptimize(report.rho);
    }
}
BENCHMARK(BM_Rho)->RangeMultiplier(2)->Range(16, 256);

void BM_VertexConnectivity(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto g = random_connected_regular(n, 5, 31);
    for (auto _ : state) benchmark::DoNotOptimize(vertex_connectivity(g));
}
BENCHMARK(BM_VertexConnectivity)->RangeMultiplier(2)->Range(8, 64);

void BM_CompareBounds(benchmark::State& state) {
    const auto g = random_connected_regular(24, 5, 3);
    for (auto _ : state) {
        auto c = compare_bounds(g);
        benchmark::DoNotOptimize(c.exact);
    }
}
BENCHMARK(BM_CompareBounds);

void BM_DetectSrg(benchmark::State& state) {
    const auto g = paley(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(detect_srg(g));
}
BENCHMARK(BM_DetectSrg)->Arg(13)->Arg(37)->Arg(101);

}  // namespace
BENCHMARK_MAIN();
