#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "ssna/stemmer.hpp"
#include "ssna/textprep.hpp"

namespace {

const std::vector<std::string> kItalianWords{
    "organizzazione", "felicità",   "mangiavamo", "progettazione", "comunicare",
    "disponibilità",  "lavorando",  "bellissimo", "importante",    "responsabilità",
};

std::string make_text(std::size_t words) {
    std::string out;
    for (std::size_t i = 0; i < words; ++i) {
        out += kItalianWords[i % kItalianWords.size()];
        out += ' ';
    }
    return out;
}

}  // namespace

static void BM_StemItalian(benchmark::State& state) {
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(ssna::stem_italian(kItalianWords[i % kItalianWords.size()]));
        ++i;
    }
}
BENCHMARK(BM_StemItalian);

static void BM_StemEnglish(benchmark::State& state) {
    const std::vector<std::string> words{"nationalities", "hopefulness", "arguing",
                                         "connected",     "generously",  "rationalize"};
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(ssna::stem_english(words[i % words.size()]));
        ++i;
    }
}
BENCHMARK(BM_StemEnglish);

static void BM_Preprocess(benchmark::State& state) {
    const std::string text = make_text(static_cast<std::size_t>(state.range(0)));
    ssna::PreprocessConfig cfg;
    cfg.language = ssna::Language::italian;
    cfg.stopwords = ssna::builtin_stopwords(ssna::Language::italian);
    for (auto _ : state) {
        benchmark::DoNotOptimize(ssna::preprocess(text, cfg));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Preprocess)->Arg(32)->Arg(256)->Arg(2048);
