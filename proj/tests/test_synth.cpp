#include <doctest.h>

#include <sstream>

#include "ssna/network.hpp"
#include "ssna/synth.hpp"

using namespace ssna;

namespace {

SynthConfig small_config(std::uint64_t seed) {
    SynthConfig cfg;
    cfg.n_actors = 20;
    cfg.n_vocab_clusters = 3;
    cfg.words_per_cluster = 20;
    cfg.posts_per_actor = 3;
    cfg.words_per_post = 15;
    cfg.seed = seed;
    return cfg;
}

}  // namespace

TEST_CASE("synthetic corpora are reproducible per seed") {
    const auto r1 = generate(small_config(7));
    const auto r2 = generate(small_config(7));
    REQUIRE(r1.corpus.posts().size() == r2.corpus.posts().size());
    for (std::size_t i = 0; i < r1.corpus.posts().size(); ++i) {
        CHECK(r1.corpus.posts()[i].post_id == r2.corpus.posts()[i].post_id);
        CHECK(r1.corpus.posts()[i].text == r2.corpus.posts()[i].text);
    }
    const auto r3 = generate(small_config(8));
    bool any_difference = r1.corpus.posts().size() != r3.corpus.posts().size();
    for (std::size_t i = 0; !any_difference && i < r1.corpus.posts().size(); ++i)
        any_difference = r1.corpus.posts()[i].text != r3.corpus.posts()[i].text;
    CHECK(any_difference);
}

TEST_CASE("the planted interaction matrix is recovered by graph construction") {
    const auto r = generate(small_config(11));
    const auto g = build_graph(r.corpus);  // default rule
    REQUIRE(g.nodes() == r.interaction.actors());
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j)
            CHECK((g.edge_weight(i, j) > 0 ? 1.0 : 0.0) == r.interaction.at(i, j));
}

TEST_CASE("post counts follow the configuration") {
    const auto cfg = small_config(3);
    const auto r = generate(cfg);
    std::size_t ties = 0;
    for (std::size_t i = 0; i < r.interaction.size(); ++i)
        for (std::size_t j = i + 1; j < r.interaction.size(); ++j)
            if (r.interaction.at(i, j) > 0) ++ties;
    // Base posts plus a two-post thread per realized tie.
    CHECK(r.corpus.posts().size() ==
          static_cast<std::size_t>(cfg.n_actors * cfg.posts_per_actor) + 2 * ties);
    CHECK(r.corpus.actors().size() == static_cast<std::size_t>(cfg.n_actors));
    CHECK(r.cluster_of.size() == static_cast<std::size_t>(cfg.n_actors));
}

TEST_CASE("same-cluster actors share more vocabulary") {
    auto cfg = small_config(5);
    cfg.n_actors = 30;
    const auto r = generate(cfg);
    double same = 0.0, cross = 0.0;
    std::size_t n_same = 0, n_cross = 0;
    for (std::size_t i = 0; i < r.text_similarity.size(); ++i) {
        for (std::size_t j = i + 1; j < r.text_similarity.size(); ++j) {
            if (r.cluster_of[i] == r.cluster_of[j]) {
                same += r.text_similarity.at(i, j);
                ++n_same;
            } else {
                cross += r.text_similarity.at(i, j);
                ++n_cross;
            }
        }
    }
    REQUIRE(n_same > 0);
    REQUIRE(n_cross > 0);
    CHECK(same / n_same > cross / n_cross);
}

TEST_CASE("degenerate configurations are rejected") {
    auto cfg = small_config(1);
    cfg.n_actors = 1;
    CHECK_THROWS_AS(cfg.validate(), Error);
    cfg = small_config(1);
    cfg.words_per_post = 0;
    CHECK_THROWS_AS(cfg.validate(), Error);
    cfg = small_config(1);
    cfg.n_vocab_clusters = 0;
    CHECK_THROWS_AS(cfg.validate(), Error);
}

TEST_CASE("an unidentifiable text effect produces a warning, not an error") {
    auto cfg = small_config(2);
    cfg.n_vocab_clusters = 1;
    cfg.beta_text = 2.0;
    const auto r = generate(cfg);
    CHECK_FALSE(r.warnings.empty());
}

TEST_CASE("ground-truth matrices are aligned with the corpus actors") {
    const auto r = generate(small_config(9));
    CHECK(r.interaction.actors() == r.corpus.actors());
    CHECK(r.text_similarity.actors() == r.corpus.actors());
    CHECK(r.activity_absdiff.actors() == r.corpus.actors());
}
