#include <doctest.h>

#include <cmath>
#include <sstream>

#include "ssna/corpus.hpp"
#include "ssna/semantics.hpp"

using namespace ssna;

namespace {

SentimentProvider provider_with(std::map<std::string, double> lexicon) {
    SentimentProvider p;
    p.lexicon = std::move(lexicon);
    return p;
}

}  // namespace

TEST_CASE("emotionality is zero iff all words are neutral") {
    const auto p = provider_with({{"bene", 0.5}, {"male", 0.5}});
    CHECK(*emotionality({"bene", "male", "bene"}, p) == 0.0);
    const auto q = provider_with({{"bene", 0.51}});
    CHECK(*emotionality({"bene"}, q) > 0.0);
}

TEST_CASE("a single fully polar word gives emotionality one") {
    CHECK(*emotionality({"ottimo"}, provider_with({{"ottimo", 1.0}})) == 1.0);
    CHECK(*emotionality({"pessimo"}, provider_with({{"pessimo", 0.0}})) == 1.0);
}

TEST_CASE("emotionality of a 0.9/0.1 pair is exactly 0.8") {
    const auto p = provider_with({{"ottimo", 0.9}, {"pessimo", 0.1}});
    CHECK(*emotionality({"ottimo", "pessimo"}, p) == doctest::Approx(0.8).epsilon(1e-12));
}

TEST_CASE("emotionality stays within the unit interval") {
    const auto p = provider_with({{"a", 0.0}, {"b", 1.0}, {"c", 0.3}, {"d", 0.77}});
    for (const auto& tokens : std::vector<std::vector<std::string>>{
             {"a"}, {"a", "b"}, {"a", "b", "c", "d"}, {"c", "d", "d"}}) {
        const double e = *emotionality(tokens, p);
        CHECK(e >= 0.0);
        CHECK(e <= 1.0);
    }
}

TEST_CASE("emotionality of an empty token list is undefined") {
    CHECK_FALSE(emotionality({}, provider_with({})).has_value());
}

TEST_CASE("unknown words fall back to the neutral default") {
    SentimentProvider p;
    CHECK(post_sentiment({"sconosciuto"}, p) == 0.5);
    p.oov_default = 0.7;
    CHECK(post_sentiment({"sconosciuto"}, p) == 0.7);
}

TEST_CASE("post sentiment is the mean of word scores") {
    const auto p = provider_with({{"bene", 0.8}, {"male", 0.4}});
    CHECK(post_sentiment({"bene", "male"}, p) == doctest::Approx(0.6).epsilon(1e-12));
    CHECK(post_sentiment({}, p) == 0.5);  // empty falls back to the default
}

TEST_CASE("sentiment scores outside the unit interval are rejected") {
    SentimentProvider p;
    p.lexicon = {{"fuori", 1.5}};
    CHECK_THROWS_AS(p.validate(), Error);
    SentimentProvider q;
    q.external = {{"p1", -0.1}};
    CHECK_THROWS_AS(q.validate(), Error);
}

TEST_CASE("lexicon and external score CSV loaders") {
    std::istringstream lex("word,score\nottimo,0.95\nmale,0.2\n");
    const auto m = load_lexicon(lex);
    CHECK(m.at("ottimo") == doctest::Approx(0.95));
    CHECK(m.at("male") == doctest::Approx(0.2));
    std::istringstream ext("post_id,sentiment\np1,0.4\np2,0.9\n");
    const auto e = load_external_scores(ext);
    CHECK(e.at("p2") == doctest::Approx(0.9));
}

TEST_CASE("complexity of a ubiquitous word is zero") {
    PostFrequencyIndex idx;
    idx.n_posts = 5;
    idx.post_df = {{"ciao", 5}};
    CHECK(*complexity({"ciao", "ciao"}, idx, LogBase::natural) == 0.0);
}

TEST_CASE("complexity hand case: rare plus ubiquitous word") {
    PostFrequencyIndex idx;
    idx.n_posts = 10;
    idx.post_df = {{"raro", 1}, {"comune", 10}};
    const double c = *complexity({"raro", "comune"}, idx, LogBase::natural);
    CHECK(c == doctest::Approx(1.1513).epsilon(1e-4));
    CHECK(c == doctest::Approx(std::log(10.0) / 2.0).epsilon(1e-12));
}

TEST_CASE("complexity is invariant under duplication of the token multiset") {
    PostFrequencyIndex idx;
    idx.n_posts = 8;
    idx.post_df = {{"raro", 1}, {"medio", 4}, {"comune", 8}};
    const std::vector<std::string> once{"raro", "medio", "medio", "comune"};
    std::vector<std::string> thrice;
    for (int k = 0; k < 3; ++k) thrice.insert(thrice.end(), once.begin(), once.end());
    CHECK(*complexity(once, idx, LogBase::natural) ==
          *complexity(thrice, idx, LogBase::natural));
}

TEST_CASE("complexity respects the configured log base") {
    PostFrequencyIndex idx;
    idx.n_posts = 10;
    idx.post_df = {{"raro", 1}};
    CHECK(*complexity({"raro"}, idx, LogBase::base10) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(*complexity({"raro"}, idx, LogBase::base2) ==
          doctest::Approx(std::log2(10.0)).epsilon(1e-12));
}

TEST_CASE("complexity of an empty token list is undefined") {
    PostFrequencyIndex idx;
    idx.n_posts = 3;
    CHECK_FALSE(complexity({}, idx, LogBase::natural).has_value());
}

TEST_CASE("post frequency index counts posts containing a word once") {
    CorpusBuilder b;
    b.add_post({"p1", "a", "t1", 1, "vendite vendite mercato"});
    b.add_post({"p2", "b", "t2", 1, "vendite bilancio"});
    b.add_post({"p3", "c", "t3", 1, "formazione"});
    PreprocessConfig cfg;
    cfg.language = Language::italian;
    cfg.stemmer = StemmerKind::none;
    const auto idx = build_post_frequency_index(b.build(), cfg);
    CHECK(idx.n_posts == 3);
    CHECK(idx.post_df.at("vendite") == 2);  // not 3: p1 counts once
    CHECK(idx.post_df.at("mercato") == 1);
}

TEST_CASE("post length counts codepoints of surviving tokens") {
    PreprocessConfig cfg;
    cfg.language = Language::italian;
    cfg.stopwords = {"il", "è"};
    // "progetto difficile" -> 8 + 1 + 9 codepoints.
    CHECK(post_length("Il progetto è difficile!", cfg) == 18);
    CHECK(post_length("perché", cfg) == 6);  // accented letter is one character
    CHECK(post_length("il è", cfg) == 0);
}

TEST_CASE("actor metrics average per-post values and skip undefined posts") {
    CorpusBuilder b;
    b.add_post({"p1", "anna", "t1", 1, "ottimo mercato"});
    b.add_post({"p2", "anna", "t2", 1, "pessimo bilancio"});
    b.add_post({"p3", "bruno", "t3", 1, "il la"});  // empty after stopwords
    const Corpus c = b.build();
    PreprocessConfig cfg;
    cfg.language = Language::italian;
    cfg.stopwords = {"il", "la"};
    cfg.stemmer = StemmerKind::none;
    auto p = provider_with({{"ottimo", 0.9}, {"pessimo", 0.1}});
    const auto idx = build_post_frequency_index(c, cfg);
    const auto metrics = actor_metrics(c, p, idx, cfg);
    REQUIRE(metrics.size() == 2);
    CHECK(metrics[0].author_id == "anna");
    // post sentiments: (0.9+0.5)/2 = 0.7 and (0.1+0.5)/2 = 0.3 -> mean 0.5.
    CHECK(*metrics[0].sentiment == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(metrics[0].n_posts == 2);
    // bruno's only post has no scorable words: metrics undefined.
    CHECK(metrics[1].author_id == "bruno");
    CHECK_FALSE(metrics[1].emotionality.has_value());
    CHECK_FALSE(metrics[1].complexity.has_value());
}

TEST_CASE("external post scores override the lexicon mean for sentiment") {
    CorpusBuilder b;
    b.add_post({"p1", "anna", "t1", 1, "ottimo"});
    const Corpus c = b.build();
    PreprocessConfig cfg;
    cfg.language = Language::italian;
    SentimentProvider p;
    p.mode = SentimentProvider::Mode::external_scores;
    p.lexicon = {{"ottimo", 0.9}};
    p.external = {{"p1", 0.123}};
    const auto idx = build_post_frequency_index(c, cfg);
    const auto pm = post_metrics(c, p, idx, cfg);
    REQUIRE(pm.size() == 1);
    CHECK(pm[0].sentiment == doctest::Approx(0.123));
    // Emotionality still works from word-level scores.
    CHECK(pm[0].emotionality.has_value());
}

TEST_CASE("single-post authors inherit that post's metrics") {
    CorpusBuilder b;
    b.add_post({"p1", "anna", "t1", 1, "ottimo mercato"});
    const Corpus c = b.build();
    PreprocessConfig cfg;
    cfg.language = Language::italian;
    cfg.stemmer = StemmerKind::none;
    auto p = provider_with({{"ottimo", 0.9}});
    const auto idx = build_post_frequency_index(c, cfg);
    const auto pm = post_metrics(c, p, idx, cfg);
    const auto am = actor_metrics(c, p, idx, cfg);
    REQUIRE(pm.size() == 1);
    REQUIRE(am.size() == 1);
    CHECK(*am[0].sentiment == pm[0].sentiment);
    CHECK(*am[0].emotionality == *pm[0].emotionality);
    CHECK(*am[0].complexity == *pm[0].complexity);
    CHECK(*am[0].length == static_cast<double>(pm[0].length));
}
