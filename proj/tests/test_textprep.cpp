#include <doctest.h>

#include <cmath>
#include <fstream>
#include <sstream>

#include "ssna/corpus.hpp"
#include "ssna/stemmer.hpp"
#include "ssna/textprep.hpp"

using namespace ssna;

namespace {

Corpus corpus_of(const std::vector<std::tuple<std::string, std::string>>& author_texts) {
    CorpusBuilder b;
    int i = 0;
    for (const auto& [author, text] : author_texts)
        b.add_post({"p" + std::to_string(++i), author, "t" + std::to_string(i), 1, text});
    return b.build();
}

PreprocessConfig italian_cfg() {
    PreprocessConfig cfg;
    cfg.language = Language::italian;
    cfg.stopwords = builtin_stopwords(Language::italian);
    return cfg;
}

}  // namespace

TEST_CASE("stopword files skip blanks and comments") {
    std::istringstream in("il\n\n# commento\nla\n  \nper\n");
    const auto sw = load_stopwords(in);
    CHECK(sw == std::set<std::string>{"il", "la", "per"});
}

TEST_CASE("builtin stopword lists are populated") {
    const auto it = builtin_stopwords(Language::italian);
    const auto en = builtin_stopwords(Language::english);
    CHECK(it.size() > 100);
    CHECK(en.size() > 100);
    CHECK(it.count("il") == 1);
    CHECK(it.count("perché") == 1);
    CHECK(en.count("the") == 1);
    CHECK(it.count("progetto") == 0);
}

TEST_CASE("preprocess lowercases, drops stopwords, then stems") {
    const auto cfg = italian_cfg();
    const auto no_stem = preprocess_tokens("Il Progetto è ANCHE difficile", cfg);
    CHECK(no_stem == std::vector<std::string>{"progetto", "difficile"});
    const auto stemmed = preprocess("Il Progetto è ANCHE difficile", cfg);
    CHECK(stemmed == std::vector<std::string>{stem_italian("progetto"),
                                              stem_italian("difficile")});
}

TEST_CASE("preprocess with stemmer none keeps surface forms") {
    auto cfg = italian_cfg();
    cfg.stemmer = StemmerKind::none;
    CHECK(preprocess("mangiavamo spesso", cfg) ==
          std::vector<std::string>{"mangiavamo", "spesso"});
}

TEST_CASE("preprocessed output never contains stopwords") {
    const auto cfg = italian_cfg();
    const auto tokens =
        preprocess_tokens("il la per che non più un una sono con progetto", cfg);
    for (const auto& t : tokens) CHECK(cfg.stopwords.count(t) == 0);
    CHECK(tokens == std::vector<std::string>{"progetto"});
}

TEST_CASE("author documents aggregate term counts per author") {
    const Corpus c = corpus_of({
        {"anna", "vendite mercato vendite"},
        {"anna", "mercato estero"},
        {"bruno", "bilancio mercato"},
    });
    auto cfg = italian_cfg();
    cfg.stemmer = StemmerKind::none;
    const auto [docs, index] = build_author_documents(c, cfg);
    REQUIRE(docs.size() == 2);
    CHECK(docs[0].author_id == "anna");
    CHECK(docs[0].term_counts.at("vendite") == 2);
    CHECK(docs[0].term_counts.at("mercato") == 2);
    CHECK(docs[0].term_counts.at("estero") == 1);
    CHECK(docs[1].term_counts.at("bilancio") == 1);
    CHECK(index.n_docs == 2);
    CHECK(index.df.at("mercato") == 2);  // document frequency over authors
    CHECK(index.df.at("vendite") == 1);
}

TEST_CASE("tfidf vectors have unit norm and match hand arithmetic") {
    const Corpus c = corpus_of({
        {"anna", "vendite mercato vendite"},
        {"bruno", "bilancio mercato"},
    });
    auto cfg = italian_cfg();
    cfg.stemmer = StemmerKind::none;
    const auto [docs, index] = build_author_documents(c, cfg);

    SUBCASE("smoothed idf") {
        const auto res = tfidf_vectors(docs, index, IdfScheme::smoothed);
        CHECK(res.empty_authors.empty());
        for (const auto& v : res.vectors) {
            double norm2 = 0.0;
            for (const auto& [term, w] : v.weights) norm2 += w * w;
            CHECK(std::sqrt(norm2) == doctest::Approx(1.0).epsilon(1e-9));
        }
        // anna: tf(vendite)=2 idf=ln(3/2)+1, tf(mercato)=1 idf=ln(3/3)+1.
        const double wv = 2.0 * (std::log(3.0 / 2.0) + 1.0);
        const double wm = 1.0 * (std::log(3.0 / 3.0) + 1.0);
        const double norm = std::sqrt(wv * wv + wm * wm);
        const auto& anna = res.vectors[0];
        REQUIRE(anna.weights.size() == 2);
        CHECK(anna.weights[0].first == "mercato");  // term-sorted
        CHECK(anna.weights[0].second == doctest::Approx(wm / norm).epsilon(1e-12));
        CHECK(anna.weights[1].second == doctest::Approx(wv / norm).epsilon(1e-12));
    }
    SUBCASE("raw idf zeroes ubiquitous terms") {
        const auto res = tfidf_vectors(docs, index, IdfScheme::raw);
        const auto& anna = res.vectors[0];
        // idf(mercato) = ln(2/2) = 0, so vendite carries all the weight.
        for (const auto& [term, w] : anna.weights)
            CHECK(w == (term == "vendite" ? doctest::Approx(1.0) : doctest::Approx(0.0)));
    }
}

TEST_CASE("duplicating a document's tokens leaves its tfidf vector unchanged") {
    const Corpus once = corpus_of({{"anna", "vendite mercato"}, {"bruno", "bilancio"}});
    const Corpus twice = corpus_of(
        {{"anna", "vendite mercato vendite mercato"}, {"bruno", "bilancio"}});
    auto cfg = italian_cfg();
    cfg.stemmer = StemmerKind::none;
    const auto [d1, i1] = build_author_documents(once, cfg);
    const auto [d2, i2] = build_author_documents(twice, cfg);
    const auto v1 = tfidf_vectors(d1, i1, IdfScheme::smoothed).vectors;
    const auto v2 = tfidf_vectors(d2, i2, IdfScheme::smoothed).vectors;
    REQUIRE(v1[0].weights.size() == v2[0].weights.size());
    for (std::size_t k = 0; k < v1[0].weights.size(); ++k) {
        CHECK(v1[0].weights[k].first == v2[0].weights[k].first);
        CHECK(v1[0].weights[k].second ==
              doctest::Approx(v2[0].weights[k].second).epsilon(1e-12));
    }
}

TEST_CASE("authors reduced to nothing by preprocessing are flagged") {
    const Corpus c = corpus_of({
        {"anna", "vendite mercato"},
        {"bruno", "bilancio estero"},
        {"carla", "il la per"},  // all stopwords
    });
    auto cfg = italian_cfg();
    cfg.stemmer = StemmerKind::none;
    const auto [docs, index] = build_author_documents(c, cfg);
    const auto res = tfidf_vectors(docs, index, IdfScheme::smoothed);
    CHECK(res.empty_authors == std::vector<std::string>{"carla"});

    const DyadMatrix m = text_similarity_matrix(res.vectors);
    const auto ci = m.index_of("carla");
    REQUIRE(ci.has_value());
    const auto ai = m.index_of("anna");
    CHECK(m.is_missing(*ai, *ci));
    CHECK_FALSE(m.is_missing(*ai, *m.index_of("bruno")));
}

TEST_CASE("text similarity is symmetric, bounded, and hollow") {
    const Corpus c = corpus_of({
        {"anna", "vendite mercato estero bilancio"},
        {"bruno", "vendite mercato interno"},
        {"carla", "formazione sicurezza corso"},
    });
    auto cfg = italian_cfg();
    const auto [docs, index] = build_author_documents(c, cfg);
    const auto res = tfidf_vectors(docs, index, IdfScheme::smoothed);
    const DyadMatrix m = text_similarity_matrix(res.vectors);
    for (std::size_t i = 0; i < m.size(); ++i) {
        CHECK(m.is_missing(i, i));
        for (std::size_t j = i + 1; j < m.size(); ++j) {
            CHECK(m.at(i, j) == m.at(j, i));
            CHECK(m.at(i, j) >= 0.0);
            CHECK(m.at(i, j) <= 1.0);
        }
    }
    // Shared vocabulary beats disjoint vocabulary.
    const auto a = *m.index_of("anna"), b = *m.index_of("bruno"), d = *m.index_of("carla");
    CHECK(m.at(a, b) > m.at(a, d));
    CHECK(m.at(a, d) == 0.0);
}

TEST_CASE("identical documents have cosine similarity one") {
    const Corpus c = corpus_of({
        {"anna", "vendite mercato"},
        {"bruno", "vendite mercato"},
    });
    auto cfg = italian_cfg();
    cfg.stemmer = StemmerKind::none;
    const auto [docs, index] = build_author_documents(c, cfg);
    const DyadMatrix m =
        text_similarity_matrix(tfidf_vectors(docs, index, IdfScheme::smoothed).vectors);
    CHECK(m.at(0, 1) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("fewer than two non-empty vectors is an error") {
    const Corpus c = corpus_of({
        {"anna", "vendite"},
        {"bruno", "il la"},  // empty after stopwords
    });
    auto cfg = italian_cfg();
    cfg.stemmer = StemmerKind::none;
    const auto [docs, index] = build_author_documents(c, cfg);
    const auto res = tfidf_vectors(docs, index, IdfScheme::smoothed);
    CHECK_THROWS_AS(text_similarity_matrix(res.vectors), Error);
}
