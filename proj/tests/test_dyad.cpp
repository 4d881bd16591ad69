#include <doctest.h>

#include <cmath>
#include <sstream>

#include "ssna/dyad.hpp"
#include "ssna/rng.hpp"

using namespace ssna;

namespace {

DyadMatrix random_matrix(std::size_t n, std::uint64_t seed) {
    std::vector<std::string> actors;
    for (std::size_t i = 0; i < n; ++i) actors.push_back("a" + std::to_string(i));
    DyadMatrix m(actors, DyadKind::similarity);
    Rng rng(seed);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) m.set(i, j, rng.uniform01());
    return m;
}

}  // namespace

TEST_CASE("assignments are symmetric and the diagonal stays missing") {
    DyadMatrix m({"a", "b", "c"}, DyadKind::similarity);
    m.set(0, 1, 0.25);
    CHECK(m.at(0, 1) == 0.25);
    CHECK(m.at(1, 0) == 0.25);
    CHECK_FALSE(m.is_missing(0, 1));
    CHECK(m.is_missing(1, 2));  // never set
    for (std::size_t i = 0; i < 3; ++i) CHECK(m.is_missing(i, i));
    m.set(2, 2, 9.0);  // silently ignored
    CHECK(m.is_missing(2, 2));
}

TEST_CASE("match matrix marks equal attributes") {
    const auto m = match_matrix({"a", "b", "c", "d"},
                                {std::string("x"), std::string("y"), std::string("x"),
                                 std::nullopt});
    CHECK(m.at(0, 2) == 1.0);
    CHECK(m.at(0, 1) == 0.0);
    CHECK(m.is_missing(0, 3));
    CHECK(m.kind() == DyadKind::binary_match);
}

TEST_CASE("absdiff matrix takes absolute score differences") {
    const auto m = absdiff_matrix({"a", "b", "c"}, {1.0, 3.5, std::nullopt});
    CHECK(m.at(0, 1) == doctest::Approx(2.5));
    CHECK(m.is_missing(0, 2));
    CHECK(m.kind() == DyadKind::abs_difference);
}

TEST_CASE("attribute missing everywhere is an empty matrix error") {
    CHECK_THROWS_AS(match_matrix({"a", "b"}, {std::nullopt, std::nullopt}), Error);
    CHECK_THROWS_AS(absdiff_matrix({"a", "b"}, {std::nullopt, std::nullopt}), Error);
}

TEST_CASE("similarity transforms of a distance matrix") {
    const auto d = absdiff_matrix({"a", "b", "c"}, {0.0, 1.0, 4.0});
    const auto raw = to_similarity(d, SimilarityTransform::raw);
    CHECK(raw.at(0, 2) == 4.0);
    CHECK(raw.kind() == DyadKind::abs_difference);
    const auto neg = to_similarity(d, SimilarityTransform::negate);
    CHECK(neg.at(0, 2) == -4.0);
    CHECK(neg.kind() == DyadKind::similarity);
    const auto mm = to_similarity(d, SimilarityTransform::max_minus);
    CHECK(mm.at(0, 2) == 0.0);   // the largest distance maps to zero
    CHECK(mm.at(0, 1) == 3.0);
}

TEST_CASE("similarity transform rejects non-distance matrices") {
    DyadMatrix m({"a", "b"}, DyadKind::similarity);
    m.set(0, 1, 0.5);
    try {
        to_similarity(m, SimilarityTransform::negate);
        FAIL("expected KindError");
    } catch (const Error& e) {
        CHECK(e.code() == errc::kind_error);
        CHECK(e.exit_code() == 3);
    }
}

TEST_CASE("matrix csv round trip preserves values and missing cells") {
    auto m = random_matrix(5, 7);
    m.set_missing(1, 3);
    std::ostringstream out;
    m.to_csv(out);
    std::istringstream in(out.str());
    const auto back = DyadMatrix::from_csv(in, DyadKind::similarity);
    REQUIRE(back.size() == m.size());
    CHECK(back.actors() == m.actors());
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < m.size(); ++j) {
            CHECK(back.is_missing(i, j) == m.is_missing(i, j));
            if (!m.is_missing(i, j)) CHECK(back.at(i, j) == m.at(i, j));  // %.17g exact
        }
    }
}

TEST_CASE("malformed matrix csv is a schema error") {
    std::istringstream bad("author_id,a,b\na,,1\n");  // missing row for b
    CHECK_THROWS_AS(DyadMatrix::from_csv(bad, DyadKind::similarity), Error);
    std::istringstream wrong_header("id,a\na,\n");
    CHECK_THROWS_AS(DyadMatrix::from_csv(wrong_header, DyadKind::similarity), Error);
}

TEST_CASE("submatrix equals recomputation from the kept actors") {
    const auto m = random_matrix(6, 11);
    const std::vector<std::size_t> keep{0, 2, 5};
    const auto sub = m.submatrix(keep);
    REQUIRE(sub.size() == 3);
    for (std::size_t a = 0; a < keep.size(); ++a) {
        CHECK(sub.actors()[a] == m.actors()[keep[a]]);
        for (std::size_t b = 0; b < keep.size(); ++b) {
            if (a == b) continue;
            CHECK(sub.at(a, b) == m.at(keep[a], keep[b]));
        }
    }
}

TEST_CASE("filter_group with an all-true mask is the identity") {
    const auto m = random_matrix(4, 3);
    const auto out = filter_group({m}, [](const std::string&) { return true; });
    REQUIRE(out.size() == 1);
    CHECK(out[0].actors() == m.actors());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j)
            CHECK(out[0].at(i, j) == m.at(i, j));
}

TEST_CASE("filter_group needs at least three selected actors") {
    const auto m = random_matrix(5, 3);
    try {
        filter_group({m}, [](const std::string& a) { return a == "a0" || a == "a1"; });
        FAIL("expected NotEnoughActors");
    } catch (const Error& e) {
        CHECK(e.code() == errc::not_enough_actors);
        CHECK(e.exit_code() == 3);
    }
}

TEST_CASE("upper dyad enumeration covers each unordered pair once") {
    const auto m = random_matrix(4, 1);
    const auto dyads = m.upper_dyads();
    CHECK(dyads.size() == 6);
    for (const auto& [i, j] : dyads) CHECK(i < j);
}
