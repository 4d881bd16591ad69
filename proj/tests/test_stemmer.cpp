#include <doctest.h>

#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include "ssna/stemmer.hpp"

using namespace ssna;

namespace {

// word\tstem pairs frozen from the reference Snowball implementation.
std::vector<std::pair<std::string, std::string>> load_pairs(const std::string& name) {
    std::ifstream in(std::string(SSNA_TEST_DATA_DIR) + "/" + name);
    REQUIRE(in.good());
    std::vector<std::pair<std::string, std::string>> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto tab = line.find('\t');
        REQUIRE(tab != std::string::npos);
        out.emplace_back(line.substr(0, tab), line.substr(tab + 1));
    }
    return out;
}

}  // namespace

TEST_CASE("italian stemmer matches the reference vectors") {
    const auto pairs = load_pairs("stems_italian.tsv");
    REQUIRE(pairs.size() > 150);
    for (const auto& [word, stem] : pairs) {
        CAPTURE(word);
        CHECK(stem_italian(word) == stem);
    }
}

TEST_CASE("english stemmer matches the reference vectors") {
    const auto pairs = load_pairs("stems_english.tsv");
    REQUIRE(pairs.size() > 300);
    for (const auto& [word, stem] : pairs) {
        CAPTURE(word);
        CHECK(stem_english(word) == stem);
    }
}

TEST_CASE("very short words pass through unchanged") {
    CHECK(stem_italian("a") == "a");
    CHECK(stem_italian("io") == "io");
    CHECK(stem_english("a") == "a");
    CHECK(stem_english("ox") == "ox");
}

TEST_CASE("stemming is deterministic") {
    for (const char* w : {"organizzazione", "felicità", "mangiavamo"}) {
        CHECK(stem_italian(w) == stem_italian(w));
    }
    for (const char* w : {"nationalities", "hopefulness", "arguing"}) {
        CHECK(stem_english(w) == stem_english(w));
    }
}

TEST_CASE("inflection families collapse to one stem") {
    CHECK(stem_italian("mangio") == stem_italian("mangiavamo"));
    CHECK(stem_italian("lavoro") == stem_italian("lavorare"));
    CHECK(stem_english("connected") == stem_english("connection"));
    CHECK(stem_english("argue") == stem_english("arguing"));
}
