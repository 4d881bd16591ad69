#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "ssna/error.hpp"
#include "ssna/manifest.hpp"

using namespace ssna;

TEST_CASE("fnv1a64 is stable for known inputs") {
    CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
    CHECK(fnv1a64("abc") == fnv1a64("abc"));
    CHECK(fnv1a64("abc") != fnv1a64("abd"));
}

TEST_CASE("file digests carry the algorithm prefix") {
    const std::string path = "/tmp/ssna_digest_test.txt";
    {
        std::ofstream out(path);
        out << "contenuto";
    }
    const auto d = file_digest(path);
    CHECK(d.rfind("fnv1a64:", 0) == 0);
    CHECK(d == file_digest(path));
    std::remove(path.c_str());
    CHECK_THROWS_AS(file_digest("/definitely/not/here"), Error);
}

TEST_CASE("run config survives a json round trip") {
    RunConfig c;
    c.posts_path = "posts.jsonl";
    c.language = "english";
    c.idf_scheme = "raw";
    c.rotation_threshold = 0.42;
    c.permutations = 123;
    c.seed = 987654321;
    c.synth_beta_text = 1.25;
    const RunConfig back = RunConfig::from_json(c.to_json());
    CHECK(back.to_json() == c.to_json());
    CHECK(back.posts_path == "posts.jsonl");
    CHECK(back.rotation_threshold == 0.42);
    CHECK(back.seed == 987654321);
    CHECK(back.synth_beta_text == 1.25);
}

TEST_CASE("partial config files keep defaults for missing keys") {
    const RunConfig c = RunConfig::from_json(R"({"language": "english"})");
    CHECK(c.language == "english");
    CHECK(c.idf_scheme == "smoothed");   // default untouched
    CHECK(c.permutations == 2000);
}

TEST_CASE("a manifest is accepted wherever a config is") {
    RunConfig c;
    c.posts_path = "x.jsonl";
    c.seed = 55;
    std::ostringstream manifest;
    write_manifest(manifest, "report", c, {{"x.jsonl", "fnv1a64:00"}});
    const RunConfig back = RunConfig::from_json(manifest.str());
    CHECK(back.posts_path == "x.jsonl");
    CHECK(back.seed == 55);
}

TEST_CASE("invalid config json is a config error") {
    try {
        RunConfig::from_json("{nope");
        FAIL("expected ConfigError");
    } catch (const Error& e) {
        CHECK(e.code() == errc::config_error);
        CHECK(e.exit_code() == 2);
    }
}

TEST_CASE("manifests are byte-stable for identical inputs") {
    RunConfig c;
    c.posts_path = "p.jsonl";
    std::ostringstream m1, m2;
    write_manifest(m1, "qap", c, {{"p.jsonl", "fnv1a64:11"}});
    write_manifest(m2, "qap", c, {{"p.jsonl", "fnv1a64:11"}});
    CHECK(m1.str() == m2.str());
    CHECK(m1.str().find("\"subcommand\": \"qap\"") != std::string::npos);
    CHECK(m1.str().find("\"version\"") != std::string::npos);
}
