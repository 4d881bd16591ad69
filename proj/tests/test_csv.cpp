#include <doctest.h>

#include <sstream>

#include "ssna/csv.hpp"

using namespace ssna;

TEST_CASE("csv escape quotes only when needed") {
    CHECK(csv::escape("plain") == "plain");
    CHECK(csv::escape("with,comma") == "\"with,comma\"");
    CHECK(csv::escape("with\"quote") == "\"with\"\"quote\"");
    CHECK(csv::escape("with\nnewline") == "\"with\nnewline\"");
    CHECK(csv::escape("") == "");
}

TEST_CASE("csv write/parse round trip") {
    const std::vector<std::vector<std::string>> rows = {
        {"a", "b,c", "d\"e"},
        {"", "multi\nline", "z"},
    };
    std::ostringstream out;
    for (const auto& r : rows) csv::write_row(out, r);
    CHECK(csv::parse_string(out.str()) == rows);
}

TEST_CASE("csv parse handles crlf and missing trailing newline") {
    CHECK(csv::parse_string("a,b\r\nc,d") ==
          std::vector<std::vector<std::string>>{{"a", "b"}, {"c", "d"}});
}

TEST_CASE("csv parse of empty input yields no rows") {
    CHECK(csv::parse_string("").empty());
}
