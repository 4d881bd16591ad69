#pragma once

#include <string>
#include <string_view>

namespace ssna {

// Snowball stemmers. Input is expected to be a single lowercase UTF-8 word;
// output is the UTF-8 stem.
std::string stem_italian(std::string_view word);
std::string stem_english(std::string_view word);

}  // namespace ssna
