#include <benchmark/benchmark.h>


#include <cstdint>
#include <string>
#include <vector>

#include "ssna/network.hpp"
#include "ssna/rng.hpp"

namespace {

// Erdős–Rényi-ish graph with a deterministic seed.
ssna::InteractionGraph random_graph(std::size_t n, double edge_prob, std::uint64_t seed) {
    std::vector<std::string> nodes;
    nodes.reserve(n);
    for (std::size_t i = 0; i < n; ++i) nodes.push_back("n" + std::to_string(i));
    ssna::InteractionGraph g(std::move(nodes));
    ssna::Rng rng(seed);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (rng.uniform01() < edge_prob) g.add_interaction(i, j);
    return g;
}

}  // namespace

static void BM_Betweenness(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto g = random_graph(n, 8.0 / static_cast<double>(n), 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(ssna::betweenness(g));
    }
    state.SetComplexityN(static_cast<std::int64_t>(n));
}
BENCHMARK(BM_Betweenness)->Arg(100)->Arg(400)->Arg(1600)->Complexity();

static void BM_Degree(benchmark::State& state) {
    const auto g = random_graph(1600, 0.005, 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(ssna::degree(g));
    }
}
BENCHMARK(BM_Degree);

static void BM_GraphStats(benchmark::State& state) {
    const auto g = random_graph(400, 0.02, 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(ssna::graph_stats(g));
    }
}
BENCHMARK(BM_GraphStats);
