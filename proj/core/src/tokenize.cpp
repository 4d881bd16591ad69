#include "ssna/tokenize.hpp"

namespace ssna {

std::u32string utf8_decode(std::string_view s) {
    std::u32string out;
    out.reserve(s.size());
    std::size_t i = 0;
    while (i < s.size()) {
        const auto b0 = static_cast<unsigned char>(s[i]);
        char32_t cp = 0xFFFD;
        std::size_t len = 1;
        if (b0 < 0x80) {
            cp = b0;
        } else if ((b0 & 0xE0) == 0xC0 && i + 1 < s.size() &&
                   (static_cast<unsigned char>(s[i + 1]) & 0xC0) == 0x80) {
            cp = (static_cast<char32_t>(b0 & 0x1F) << 6) |
                 (static_cast<unsigned char>(s[i + 1]) & 0x3F);
            len = 2;
        } else if ((b0 & 0xF0) == 0xE0 && i + 2 < s.size() &&
                   (static_cast<unsigned char>(s[i + 1]) & 0xC0) == 0x80 &&
                   (static_cast<unsigned char>(s[i + 2]) & 0xC0) == 0x80) {
            cp = (static_cast<char32_t>(b0 & 0x0F) << 12) |
                 ((static_cast<char32_t>(static_cast<unsigned char>(s[i + 1]) & 0x3F)) << 6) |
                 (static_cast<unsigned char>(s[i + 2]) & 0x3F);
            len = 3;
        } else if ((b0 & 0xF8) == 0xF0 && i + 3 < s.size() &&
                   (static_cast<unsigned char>(s[i + 1]) & 0xC0) == 0x80 &&
                   (static_cast<unsigned char>(s[i + 2]) & 0xC0) == 0x80 &&
                   (static_cast<unsigned char>(s[i + 3]) & 0xC0) == 0x80) {
            cp = (static_cast<char32_t>(b0 & 0x07) << 18) |
                 ((static_cast<char32_t>(static_cast<unsigned char>(s[i + 1]) & 0x3F)) << 12) |
                 ((static_cast<char32_t>(static_cast<unsigned char>(s[i + 2]) & 0x3F)) << 6) |
                 (static_cast<unsigned char>(s[i + 3]) & 0x3F);
            len = 4;
        }
        out.push_back(cp);
        i += len;
    }
    return out;
}

std::string utf8_encode(const std::u32string& s) {
    std::string out;
    out.reserve(s.size());
    for (char32_t cp : s) {
        if (cp < 0x80) {
            out.push_back(static_cast<char>(cp));
        } else if (cp < 0x800) {
            out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
            out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
        } else if (cp < 0x10000) {
            out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
            out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
            out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
        } else {
            out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
            out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
            out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
            out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
        }
    }
    return out;
}

bool is_word_char(char32_t c) {
    if ((c >= U'0' && c <= U'9') || (c >= U'a' && c <= U'z') || (c >= U'A' && c <= U'Z'))
        return true;
    // Latin-1 supplement letters, excluding × (0xD7) and ÷ (0xF7).
    if (c >= 0xC0 && c <= 0xFF) return c != 0xD7 && c != 0xF7;
    // Latin Extended-A.
    if (c >= 0x100 && c <= 0x17F) return true;
    return false;
}

char32_t to_lower(char32_t c) {
    if (c >= U'A' && c <= U'Z') return c + 32;
    if (c >= 0xC0 && c <= 0xDE && c != 0xD7) return c + 32;
    // Latin Extended-A alternates upper/lower; even codepoints are uppercase
    // (with the handful of exceptions irrelevant to Italian/English corpora).
    if (c >= 0x100 && c <= 0x17F && (c % 2 == 0)) return c + 1;
    return c;
}

std::size_t utf8_length(std::string_view s) {
    std::size_t n = 0;
    for (char ch : s)
        if ((static_cast<unsigned char>(ch) & 0xC0) != 0x80) ++n;
    return n;
}

std::vector<std::string> tokenize(std::string_view text, bool lowercase) {
    std::vector<std::string> tokens;
    const std::u32string cps = utf8_decode(text);
    std::u32string cur;
    for (char32_t c : cps) {
        if (is_word_char(c)) {
            cur.push_back(lowercase ? to_lower(c) : c);
        } else if (!cur.empty()) {
            tokens.push_back(utf8_encode(cur));
            cur.clear();
        }
    }
    if (!cur.empty()) tokens.push_back(utf8_encode(cur));
    return tokens;
}

std::string lowercase_utf8(std::string_view s) {
    std::u32string cps = utf8_decode(s);
    for (auto& c : cps) c = to_lower(c);
    return utf8_encode(cps);
}

}  // namespace ssna
