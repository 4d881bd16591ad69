#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "ssna/qap.hpp"
#include "ssna/rng.hpp"

namespace {

ssna::DyadMatrix random_dyads(std::size_t n, std::uint64_t seed) {
    std::vector<std::string> actors;
    actors.reserve(n);
    for (std::size_t i = 0; i < n; ++i) actors.push_back("a" + std::to_string(i));
    ssna::DyadMatrix m(actors, ssna::DyadKind::similarity);
    ssna::Rng rng(seed);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) m.set(i, j, rng.normal());
    return m;
}

}  // namespace

static void BM_QapCorrelation(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto a = random_dyads(n, 1);
    const auto b = random_dyads(n, 2);
    ssna::QapOptions opt;
    opt.permutations = static_cast<int>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(ssna::qap_correlation(a, b, opt));
    }
    state.SetItemsProcessed(state.iterations() * state.range(1));
}
BENCHMARK(BM_QapCorrelation)
    ->Args({50, 500})
    ->Args({100, 500})
    ->Args({200, 2000})
    ->Unit(benchmark::kMillisecond);

static void BM_MrqapDsp(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto y = random_dyads(n, 1);
    std::vector<ssna::DyadMatrix> preds;
    std::vector<std::string> names;
    for (int k = 0; k < 3; ++k) {
        preds.push_back(random_dyads(n, 10 + k));
        names.push_back("x" + std::to_string(k + 1));
    }
    ssna::MrqapOptions opt;
    opt.permutations = static_cast<int>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(ssna::mrqap_dsp(y, preds, names, opt));
    }
}
BENCHMARK(BM_MrqapDsp)->Args({50, 200})->Args({100, 200})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
