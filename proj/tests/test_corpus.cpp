#include <doctest.h>

#include <fstream>
#include <sstream>

#include "ssna/corpus.hpp"
#include "ssna/report.hpp"

using namespace ssna;

namespace {

std::string data_path(const std::string& name) {
    return std::string(SSNA_TEST_DATA_DIR) + "/" + name;
}

Corpus mini_corpus() {
    std::ifstream posts(data_path("mini_posts.jsonl"));
    std::ifstream authors(data_path("mini_authors.csv"));
    REQUIRE(posts.good());
    REQUIRE(authors.good());
    return ingest_posts(posts, authors);
}

Post make_post(const std::string& id, const std::string& author, const std::string& thread,
               int week, const std::string& text) {
    return Post{id, author, thread, week, text};
}

}  // namespace

TEST_CASE("mini fixture ingests with expected shape") {
    const Corpus c = mini_corpus();
    CHECK(c.posts().size() == 24);
    CHECK(c.actors().size() == 8);
    CHECK(c.threads().size() == 8);
    CHECK(c.min_week() == 1);
    CHECK(c.max_week() == 4);
    CHECK(c.attributes("a01").gender == Gender::female);
    CHECK(c.attributes("a01").is_content_manager);
    CHECK_FALSE(c.attributes("a08").is_content_manager);
}

TEST_CASE("actors are sorted and distinct") {
    const Corpus c = mini_corpus();
    auto actors = c.actors();
    auto sorted = actors;
    std::sort(sorted.begin(), sorted.end());
    CHECK(actors == sorted);
    CHECK(std::adjacent_find(actors.begin(), actors.end()) == actors.end());
}

TEST_CASE("jsonl round trip reproduces the corpus") {
    const Corpus c = mini_corpus();
    std::ostringstream posts_out, authors_out;
    write_posts_jsonl(posts_out, c);
    write_authors_csv(authors_out, c);
    std::istringstream posts_in(posts_out.str()), authors_in(authors_out.str());
    const Corpus c2 = ingest_posts(posts_in, authors_in);
    REQUIRE(c2.posts().size() == c.posts().size());
    for (std::size_t i = 0; i < c.posts().size(); ++i) {
        CHECK(c2.posts()[i].post_id == c.posts()[i].post_id);
        CHECK(c2.posts()[i].author_id == c.posts()[i].author_id);
        CHECK(c2.posts()[i].thread_id == c.posts()[i].thread_id);
        CHECK(c2.posts()[i].week == c.posts()[i].week);
        CHECK(c2.posts()[i].text == c.posts()[i].text);
    }
    CHECK(c2.actors() == c.actors());
    // And the re-serialized form is byte-identical.
    std::ostringstream again;
    write_posts_jsonl(again, c2);
    CHECK(again.str() == posts_out.str());
}

TEST_CASE("duplicate post ids are rejected") {
    CorpusBuilder b;
    b.add_post(make_post("p1", "a", "t", 1, "ciao"));
    CHECK_THROWS_AS(b.add_post(make_post("p1", "a", "t", 1, "di nuovo")), Error);
    try {
        CorpusBuilder b2;
        b2.add_post(make_post("p1", "a", "t", 1, "ciao"));
        b2.add_post(make_post("p1", "b", "t", 2, "x"));
        FAIL("expected DuplicateId");
    } catch (const Error& e) {
        CHECK(e.code() == errc::duplicate_id);
        CHECK(e.exit_code() == 2);
    }
}

TEST_CASE("schema errors carry the offending row number") {
    std::istringstream posts(R"({"post_id":"p1","author_id":"a","thread_id":"t","week":1,"text":"ok"}
{"post_id":"p2","author_id":"a","thread_id":"t","week":"later","text":"bad week"}
)");
    try {
        ingest_posts(posts);
        FAIL("expected SchemaError");
    } catch (const Error& e) {
        CHECK(e.code() == errc::schema_error);
        CHECK(std::string(e.what()).find("2") != std::string::npos);
    }
}

TEST_CASE("empty text is rejected unless allowed") {
    CorpusBuilder strict;
    CHECK_THROWS_AS(strict.add_post(make_post("p1", "a", "t", 1, "")), Error);
    IngestPolicy policy;
    policy.allow_empty = true;
    CorpusBuilder lax(policy);
    lax.add_post(make_post("p1", "a", "t", 1, ""));
    CHECK(lax.build().posts().size() == 1);
}

TEST_CASE("empty corpus is an error") {
    CorpusBuilder b;
    CHECK_THROWS_AS(b.build(), Error);
    std::istringstream empty("");
    CHECK_THROWS_AS(ingest_posts(empty), Error);
}

TEST_CASE("unknown authors are synthesized by default, rejected when disabled") {
    {
        CorpusBuilder b;
        b.add_post(make_post("p1", "ghost", "t", 1, "ciao"));
        const Corpus c = b.build();
        CHECK(c.attributes("ghost").synthesized);
        CHECK(c.attributes("ghost").gender == Gender::unknown);
    }
    {
        IngestPolicy policy;
        policy.synthesize_unknown_authors = false;
        CorpusBuilder b(policy);
        b.add_post(make_post("p1", "ghost", "t", 1, "ciao"));
        CHECK_THROWS_AS(b.build(), Error);  // checked at build: authors may arrive late
    }
}

TEST_CASE("duplicate author records are rejected") {
    CorpusBuilder b;
    b.add_author({"a1", Gender::male, false, false});
    CHECK_THROWS_AS(b.add_author({"a1", Gender::female, true, false}), Error);
}

TEST_CASE("threads preserve ingest order") {
    const Corpus c = mini_corpus();
    const auto& t05 = c.threads().at("t05");
    REQUIRE(t05.size() == 4);
    CHECK(c.posts()[t05[0]].post_id == "p14");
    CHECK(c.posts()[t05[3]].post_id == "p17");
}

TEST_CASE("corpus statistics are exact integer quotients") {
    CorpusBuilder b;
    // 7 tokens, 5 types; "rosso" and "blu" appear twice, the rest once.
    b.add_post(make_post("p1", "a", "t1", 1, "rosso blu verde"));
    b.add_post(make_post("p2", "b", "t2", 1, "Rosso blu giallo nero"));
    const CorpusStats s = corpus_stats(b.build());
    CHECK(s.n_posts == 2);
    CHECK(s.tokens == 7);
    CHECK(s.types == 5);
    CHECK(s.hapax == 3);
    CHECK(s.type_token_ratio == doctest::Approx(5.0 / 7.0).epsilon(1e-15));
    CHECK(s.hapax_type_ratio == doctest::Approx(3.0 / 5.0).epsilon(1e-15));
}

TEST_CASE("token counts ignore punctuation and case, mirror raw text") {
    CorpusBuilder b;
    b.add_post(make_post("p1", "a", "t1", 1, "Ciao, CIAO! ciao?"));
    const CorpusStats s = corpus_stats(b.build());
    CHECK(s.tokens == 3);
    CHECK(s.types == 1);
    CHECK(s.hapax == 0);
}

TEST_CASE("ratio rendering matches reference table formatting") {
    CHECK(format_percent2(72973.0 / 2440467.0) == "2.99%");
    CHECK(format_percent2(31978.0 / 72973.0) == "43.82%");
}
