#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ssna {

// Fixed-width numeric formatting, locale-independent so reruns are
// byte-identical.
std::string format_fixed(double v, int decimals);
std::string format_percent2(double fraction);        // "2.99%"
std::string format_full(double v);                   // round-trip precision
std::string significance_stars(double p);            // *** / ** / * / ""

struct Table {
    std::string title;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

void render_csv(std::ostream& out, const Table& table);
void render_markdown(std::ostream& out, const Table& table);

}  // namespace ssna
