#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ssna {

// Minimal UTF-8 handling, sufficient for Italian/English text: ASCII plus the
// Latin-1 supplement and Latin Extended-A blocks. Malformed bytes are treated
// as non-word characters.

std::u32string utf8_decode(std::string_view s);
std::string utf8_encode(const std::u32string& s);

bool is_word_char(char32_t c);   // letter or digit
char32_t to_lower(char32_t c);

// Codepoint count (what "number of characters" means throughout).
std::size_t utf8_length(std::string_view s);

// Lowercase and split on maximal runs of letters/digits.
std::vector<std::string> tokenize(std::string_view text, bool lowercase = true);

std::string lowercase_utf8(std::string_view s);

}  // namespace ssna
