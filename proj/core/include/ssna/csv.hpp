#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace ssna::csv {

// RFC-4180-ish: quoted fields may contain commas, quotes ("" escape) and
// newlines. Rows are vectors of strings.

std::vector<std::vector<std::string>> parse(std::istream& in);
std::vector<std::vector<std::string>> parse_string(std::string_view text);

std::string escape(std::string_view field);
void write_row(std::ostream& out, const std::vector<std::string>& row);

}  // namespace ssna::csv
