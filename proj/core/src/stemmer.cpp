#include "ssna/stemmer.hpp"

#include <algorithm>
#include <array>
#include <initializer_list>
#include <string>

#include "ssna/tokenize.hpp"

namespace ssna {

namespace {

using U32 = std::u32string;

bool ends_with(const U32& w, const U32& suf) {
    return w.size() >= suf.size() &&
           std::equal(suf.rbegin(), suf.rend(), w.rbegin());
}

U32 u(const char32_t* s) { return U32(s); }

// ---------------------------------------------------------------------------
// Italian
// ---------------------------------------------------------------------------

constexpr char32_t A_GRAVE = 0xE0, E_GRAVE = 0xE8, I_GRAVE = 0xEC,
                   O_GRAVE = 0xF2, U_GRAVE = 0xF9;

bool it_vowel(char32_t c) {
    switch (c) {
        case U'a': case U'e': case U'i': case U'o': case U'u':
        case A_GRAVE: case E_GRAVE: case I_GRAVE: case O_GRAVE: case U_GRAVE:
            return true;
        default:
            return false;
    }
}

struct Regions {
    std::size_t rv, r1, r2;
};

template <typename IsVowel>
Regions mark_regions(const U32& w, IsVowel vowel) {
    const std::size_t n = w.size();
    Regions reg{n, n, n};
    // RV
    if (n >= 2) {
        if (!vowel(w[1])) {
            for (std::size_t i = 2; i < n; ++i)
                if (vowel(w[i])) { reg.rv = i + 1; break; }
        } else if (vowel(w[0]) && vowel(w[1])) {
            for (std::size_t i = 2; i < n; ++i)
                if (!vowel(w[i])) { reg.rv = i + 1; break; }
        } else {
            reg.rv = std::min<std::size_t>(3, n);
        }
    }
    // R1: after the first non-vowel following a vowel
    for (std::size_t i = 1; i < n; ++i)
        if (!vowel(w[i]) && vowel(w[i - 1])) { reg.r1 = i + 1; break; }
    // R2: same rule applied within R1
    for (std::size_t i = reg.r1 + 1; i < n; ++i)
        if (!vowel(w[i]) && vowel(w[i - 1])) { reg.r2 = i + 1; break; }
    return reg;
}

// Suffix lies entirely within the region starting at `start`.
bool in_region(const U32& w, std::size_t suffix_len, std::size_t start) {
    return w.size() - suffix_len >= start;
}

// Longest suffix from `cands` that matches and starts within region `start`;
// returns the suffix length, 0 if none.
std::size_t longest_suffix(const U32& w, std::initializer_list<const char32_t*> cands,
                           std::size_t start) {
    std::size_t best = 0;
    for (const char32_t* c : cands) {
        const U32 suf(c);
        if (suf.size() > best && ends_with(w, suf) && in_region(w, suf.size(), start))
            best = suf.size();
    }
    return best;
}

void it_prelude(U32& w) {
    for (auto& c : w) {
        switch (c) {
            case 0xE1: c = A_GRAVE; break;  // acute -> grave
            case 0xE9: c = E_GRAVE; break;
            case 0xED: c = I_GRAVE; break;
            case 0xF3: c = O_GRAVE; break;
            case 0xFA: c = U_GRAVE; break;
            default: break;
        }
    }
    // u after q, and u/i between vowels, marked uppercase (non-vowel).
    for (std::size_t i = 1; i < w.size(); ++i) {
        if (w[i] == U'u' && w[i - 1] == U'q') {
            w[i] = U'U';
        } else if ((w[i] == U'u' || w[i] == U'i') && i + 1 < w.size() &&
                   it_vowel(w[i - 1]) && it_vowel(w[i + 1])) {
            w[i] = (w[i] == U'u') ? U'U' : U'I';
        }
    }
}

// Attached pronoun (step 0).
void it_attached_pronoun(U32& w, const Regions& reg) {
    static const std::initializer_list<const char32_t*> pronouns = {
        U"ci", U"gli", U"la", U"le", U"li", U"lo", U"mi", U"ne", U"si", U"ti", U"vi",
        U"sene", U"gliela", U"gliele", U"glieli", U"glielo", U"gliene",
        U"mela", U"mele", U"meli", U"melo", U"mene",
        U"tela", U"tele", U"teli", U"telo", U"tene",
        U"cela", U"cele", U"celi", U"celo", U"cene",
        U"vela", U"vele", U"veli", U"velo", U"vene"};
    const std::size_t plen = longest_suffix(w, pronouns, reg.rv);
    if (plen == 0) return;
    const U32 rest = w.substr(0, w.size() - plen);
    const std::size_t a = longest_suffix(rest, {U"ando", U"endo"}, reg.rv);
    if (a > 0) {
        w = rest;
        return;
    }
    const std::size_t b = longest_suffix(rest, {U"ar", U"er", U"ir"}, reg.rv);
    if (b > 0) w = rest + u(U"e");
}

// Standard suffix removal (step 1). Returns true if the word was altered.
bool it_standard_suffix(U32& w, const Regions& reg) {
    struct Entry {
        const char32_t* suf;
        int action;  // 0 delete-R2, 1 delete-RV, 2 amente, 3 ita`, 4 ivX,
                     // 5 azione-group, 6 logia->log, 7 uzione->u, 8 enza->ente
    };
    static const Entry entries[] = {
        {U"anza", 0},   {U"anze", 0},   {U"ico", 0},   {U"ici", 0},  {U"ica", 0},
        {U"ice", 0},    {U"iche", 0},   {U"ichi", 0},  {U"ismo", 0}, {U"ismi", 0},
        {U"abile", 0},  {U"abili", 0},  {U"ibile", 0}, {U"ibili", 0},
        {U"ista", 0},   {U"iste", 0},   {U"isti", 0},
        {U"istà", 0}, {U"istè", 0}, {U"istì", 0},
        {U"oso", 0},    {U"osi", 0},    {U"osa", 0},   {U"ose", 0},
        {U"mente", 0},  {U"atrice", 0}, {U"atrici", 0},
        {U"ante", 0},   {U"anti", 0},
        {U"azione", 5}, {U"azioni", 5}, {U"atore", 5}, {U"atori", 5},
        {U"logia", 6},  {U"logie", 6},
        {U"uzione", 7}, {U"uzioni", 7}, {U"usione", 7}, {U"usioni", 7},
        {U"enza", 8},   {U"enze", 8},
        {U"amento", 1}, {U"amenti", 1}, {U"imento", 1}, {U"imenti", 1},
        {U"amente", 2},
        {U"ità", 3},
        {U"ivo", 4}, {U"ivi", 4}, {U"iva", 4}, {U"ive", 4},
    };
    const Entry* best = nullptr;
    std::size_t best_len = 0;
    for (const auto& e : entries) {
        const U32 suf(e.suf);
        if (suf.size() > best_len && ends_with(w, suf)) {
            best = &e;
            best_len = suf.size();
        }
    }
    if (!best) return false;
    const std::size_t keep = w.size() - best_len;
    switch (best->action) {
        case 0:
            if (!in_region(w, best_len, reg.r2)) return false;
            w.erase(keep);
            return true;
        case 1:  // amento group: RV
            if (!in_region(w, best_len, reg.rv)) return false;
            w.erase(keep);
            return true;
        case 2: {  // amente: R1, then iv(at) / os / ic / abil in R2
            if (!in_region(w, best_len, reg.r1)) return false;
            w.erase(keep);
            std::size_t t = longest_suffix(w, {U"iv"}, reg.r2);
            if (t) {
                w.erase(w.size() - t);
                t = longest_suffix(w, {U"at"}, reg.r2);
                if (t) w.erase(w.size() - t);
            } else {
                t = longest_suffix(w, {U"os", U"ic", U"abil"}, reg.r2);
                if (t) w.erase(w.size() - t);
            }
            return true;
        }
        case 3: {  // ita`: R2, then abil / ic / iv in R2
            if (!in_region(w, best_len, reg.r2)) return false;
            w.erase(keep);
            const std::size_t t = longest_suffix(w, {U"abil", U"ic", U"iv"}, reg.r2);
            if (t) w.erase(w.size() - t);
            return true;
        }
        case 4: {  // ivo/ivi/iva/ive: R2, then at (then ic) in R2
            if (!in_region(w, best_len, reg.r2)) return false;
            w.erase(keep);
            std::size_t t = longest_suffix(w, {U"at"}, reg.r2);
            if (t) {
                w.erase(w.size() - t);
                t = longest_suffix(w, {U"ic"}, reg.r2);
                if (t) w.erase(w.size() - t);
            }
            return true;
        }
        case 5: {  // azione group: R2, then ic in R2
            if (!in_region(w, best_len, reg.r2)) return false;
            w.erase(keep);
            const std::size_t t = longest_suffix(w, {U"ic"}, reg.r2);
            if (t) w.erase(w.size() - t);
            return true;
        }
        case 6:
            if (!in_region(w, best_len, reg.r2)) return false;
            w.erase(keep);
            w += u(U"log");
            return true;
        case 7:
            if (!in_region(w, best_len, reg.r2)) return false;
            w.erase(keep);
            w += u(U"u");
            return true;
        case 8:
            if (!in_region(w, best_len, reg.r2)) return false;
            w.erase(keep);
            w += u(U"ente");
            return true;
    }
    return false;
}

// Verb suffixes (step 2), only reached when step 1 did nothing.
bool it_verb_suffix(U32& w, const Regions& reg) {
    static const std::initializer_list<const char32_t*> suffixes = {
        U"ammo", U"ando", U"ano", U"are", U"arono", U"asse", U"assero", U"assi",
        U"assimo", U"ata", U"ate", U"ati", U"ato", U"ava", U"avamo", U"avano",
        U"avate", U"avi", U"avo", U"emmo", U"enda", U"ende", U"endi", U"endo",
        U"erà", U"erai", U"eranno", U"ere", U"erebbe", U"erebbero", U"erei",
        U"eremmo", U"eremo", U"ereste", U"eresti", U"erete", U"erò", U"erono",
        U"essero", U"ete", U"eva", U"evamo", U"evano", U"evate", U"evi", U"evo",
        U"iamo", U"immo", U"irà", U"irai", U"iranno", U"ire",
        U"irebbe", U"irebbero", U"irei", U"iremmo", U"iremo", U"ireste", U"iresti",
        U"irete", U"irò", U"irono", U"isca", U"iscano", U"isce", U"isci",
        U"isco", U"iscono", U"issero", U"ita", U"ite", U"iti", U"ito", U"iva",
        U"ivamo", U"ivano", U"ivate", U"ivi", U"ivo", U"ono", U"uta", U"ute",
        U"uti", U"uto", U"ar", U"ir"};
    const std::size_t len = longest_suffix(w, suffixes, reg.rv);
    if (len == 0) return false;
    w.erase(w.size() - len);
    return true;
}

void it_vowel_suffix(U32& w, const Regions& reg) {
    auto is_final_vowel = [](char32_t c) {
        return c == U'a' || c == U'e' || c == U'i' || c == U'o' ||
               c == A_GRAVE || c == E_GRAVE || c == I_GRAVE || c == O_GRAVE;
    };
    if (!w.empty() && is_final_vowel(w.back()) && in_region(w, 1, reg.rv)) {
        w.pop_back();
        if (!w.empty() && w.back() == U'i' && in_region(w, 1, reg.rv)) w.pop_back();
    }
    // ch -> c, gh -> g
    if (w.size() >= 2 && w.back() == U'h' &&
        (w[w.size() - 2] == U'c' || w[w.size() - 2] == U'g') &&
        in_region(w, 2, reg.rv))
        w.pop_back();
}

std::string stem_italian_impl(std::string_view word) {
    U32 w = utf8_decode(word);
    if (w.size() < 2) return std::string(word);
    it_prelude(w);
    const Regions reg = mark_regions(w, it_vowel);
    it_attached_pronoun(w, reg);
    if (!it_standard_suffix(w, reg)) it_verb_suffix(w, reg);
    it_vowel_suffix(w, reg);
    for (auto& c : w) {
        if (c == U'U') c = U'u';
        else if (c == U'I') c = U'i';
    }
    return utf8_encode(w);
}

// ---------------------------------------------------------------------------
// English (Porter2)
// ---------------------------------------------------------------------------

bool en_vowel(char32_t c) {
    return c == U'a' || c == U'e' || c == U'i' || c == U'o' || c == U'u' || c == U'y';
}

bool en_double(const U32& w) {
    if (w.size() < 2) return false;
    const char32_t c = w.back();
    if (c != w[w.size() - 2]) return false;
    switch (c) {
        case U'b': case U'd': case U'f': case U'g': case U'm':
        case U'n': case U'p': case U'r': case U't':
            return true;
        default:
            return false;
    }
}

// Short syllable ending at position `end` (exclusive).
bool en_short_syllable_at_end(const U32& w) {
    const std::size_t n = w.size();
    if (n < 2 || en_vowel(w[n - 1]) || !en_vowel(w[n - 2])) return false;
    // Vowel at the beginning of the word followed by any non-vowel.
    if (n == 2) return true;
    // Otherwise the non-vowel must not be w, x or Y, and a non-vowel precedes.
    return w[n - 1] != U'w' && w[n - 1] != U'x' && w[n - 1] != U'Y' &&
           !en_vowel(w[n - 3]);
}

struct EnRegions {
    std::size_t r1, r2;
};

EnRegions en_mark_regions(const U32& w) {
    const std::size_t n = w.size();
    EnRegions reg{n, n};
    static const std::initializer_list<const char32_t*> prefixes = {U"gener", U"commun",
                                                                    U"arsen"};
    for (const char32_t* p : prefixes) {
        const U32 pre(p);
        if (w.size() >= pre.size() && std::equal(pre.begin(), pre.end(), w.begin())) {
            reg.r1 = pre.size();
            break;
        }
    }
    if (reg.r1 == n) {
        for (std::size_t i = 1; i < n; ++i)
            if (!en_vowel(w[i]) && en_vowel(w[i - 1])) { reg.r1 = i + 1; break; }
    }
    for (std::size_t i = reg.r1 + 1; i < n; ++i)
        if (!en_vowel(w[i]) && en_vowel(w[i - 1])) { reg.r2 = i + 1; break; }
    return reg;
}

bool en_is_short(const U32& w, const EnRegions& reg) {
    return reg.r1 >= w.size() && en_short_syllable_at_end(w);
}

bool en_contains_vowel(const U32& w, std::size_t upto) {
    for (std::size_t i = 0; i < upto && i < w.size(); ++i)
        if (en_vowel(w[i])) return true;
    return false;
}

std::string stem_english_impl(std::string_view word) {
    U32 w = utf8_decode(word);
    if (w.size() <= 2) return utf8_encode(w);
    if (w[0] == U'\'') w.erase(0, 1);

    // Exceptional forms.
    struct Exc { const char32_t* from; const char32_t* to; };
    static const Exc exceptions[] = {
        {U"skis", U"ski"},     {U"skies", U"sky"},   {U"dying", U"die"},
        {U"lying", U"lie"},    {U"tying", U"tie"},   {U"idly", U"idl"},
        {U"gently", U"gentl"}, {U"ugly", U"ugli"},   {U"early", U"earli"},
        {U"only", U"onli"},    {U"singly", U"singl"},
        {U"sky", U"sky"},      {U"news", U"news"},   {U"howe", U"howe"},
        {U"atlas", U"atlas"},  {U"cosmos", U"cosmos"}, {U"bias", U"bias"},
        {U"andes", U"andes"},
    };
    for (const auto& e : exceptions)
        if (w == U32(e.from)) return utf8_encode(U32(e.to));

    // y -> Y when consonant-valued.
    if (w[0] == U'y') w[0] = U'Y';
    for (std::size_t i = 1; i < w.size(); ++i)
        if (w[i] == U'y' && en_vowel(w[i - 1])) w[i] = U'Y';

    const EnRegions reg = en_mark_regions(w);
    auto in_r1 = [&](std::size_t slen) { return w.size() - slen >= reg.r1; };
    auto in_r2 = [&](std::size_t slen) { return w.size() - slen >= reg.r2; };

    // Step 0: apostrophe suffixes.
    for (const char32_t* s : {U"'s'", U"'s", U"'"}) {
        const U32 suf(s);
        if (ends_with(w, suf)) { w.erase(w.size() - suf.size()); break; }
    }

    // Step 1a.
    if (ends_with(w, u(U"sses"))) {
        w.erase(w.size() - 2);
    } else if (ends_with(w, u(U"ied")) || ends_with(w, u(U"ies"))) {
        w.erase(w.size() - 3);
        w += (w.size() > 1) ? u(U"i") : u(U"ie");
    } else if (ends_with(w, u(U"us")) || ends_with(w, u(U"ss"))) {
        // leave
    } else if (!w.empty() && w.back() == U's') {
        if (w.size() >= 2 && en_contains_vowel(w, w.size() - 2)) w.pop_back();
    }

    static const std::initializer_list<const char32_t*> post1a = {
        U"inning", U"outing", U"canning", U"herring", U"earring",
        U"proceed", U"exceed", U"succeed"};
    for (const char32_t* s : post1a)
        if (w == U32(s)) goto postlude;

    // Step 1b.
    {
        bool deleted = false;
        if (ends_with(w, u(U"eedly"))) {
            if (in_r1(5)) w.erase(w.size() - 3);
        } else if (ends_with(w, u(U"eed"))) {
            if (in_r1(3)) w.erase(w.size() - 1);
        } else {
            std::size_t slen = 0;
            if (ends_with(w, u(U"ingly")) || ends_with(w, u(U"edly"))) {
                slen = ends_with(w, u(U"ingly")) ? 5 : 4;
            } else if (ends_with(w, u(U"ing"))) {
                slen = 3;
            } else if (ends_with(w, u(U"ed"))) {
                slen = 2;
            }
            if (slen && en_contains_vowel(w, w.size() - slen)) {
                w.erase(w.size() - slen);
                deleted = true;
            }
        }
        if (deleted) {
            if (ends_with(w, u(U"at")) || ends_with(w, u(U"bl")) || ends_with(w, u(U"iz"))) {
                w += u(U"e");
            } else if (en_double(w)) {
                w.pop_back();
            } else if (en_is_short(w, en_mark_regions(w))) {
                w += u(U"e");
            }
        }
    }

    // Step 1c.
    if (w.size() > 2 && (w.back() == U'y' || w.back() == U'Y') &&
        !en_vowel(w[w.size() - 2]))
        w.back() = U'i';

    // Step 2 (longest match, condition: suffix in R1).
    {
        struct Map { const char32_t* from; const char32_t* to; };
        static const Map step2[] = {
            {U"ization", U"ize"}, {U"ational", U"ate"}, {U"ousness", U"ous"},
            {U"iveness", U"ive"}, {U"fulness", U"ful"}, {U"tional", U"tion"},
            {U"biliti", U"ble"},  {U"lessli", U"less"}, {U"entli", U"ent"},
            {U"ation", U"ate"},   {U"alism", U"al"},    {U"aliti", U"al"},
            {U"ousli", U"ous"},   {U"iviti", U"ive"},   {U"fulli", U"ful"},
            {U"enci", U"ence"},   {U"anci", U"ance"},   {U"abli", U"able"},
            {U"izer", U"ize"},    {U"ator", U"ate"},    {U"alli", U"al"},
            {U"bli", U"ble"},     {U"ogi", U"og"},      {U"li", U""},
        };
        for (const auto& m : step2) {
            const U32 from(m.from);
            if (!ends_with(w, from)) continue;
            if (in_r1(from.size())) {
                if (from == u(U"ogi")) {
                    if (w.size() > 3 && w[w.size() - 4] == U'l') {
                        w.erase(w.size() - 3);
                        w += u(U"og");
                    }
                } else if (from == u(U"li")) {
                    static const U32 valid = u(U"cdeghkmnrt");
                    if (w.size() > 2 && valid.find(w[w.size() - 3]) != U32::npos)
                        w.erase(w.size() - 2);
                } else {
                    w.erase(w.size() - from.size());
                    w += U32(m.to);
                }
            }
            break;
        }
    }

    // Step 3.
    {
        struct Map { const char32_t* from; const char32_t* to; bool r2; };
        static const Map step3[] = {
            {U"ational", U"ate", false}, {U"tional", U"tion", false},
            {U"alize", U"al", false},    {U"icate", U"ic", false},
            {U"iciti", U"ic", false},    {U"ative", U"", true},
            {U"ical", U"ic", false},     {U"ness", U"", false},
            {U"ful", U"", false},
        };
        for (const auto& m : step3) {
            const U32 from(m.from);
            if (!ends_with(w, from)) continue;
            if (in_r1(from.size()) && (!m.r2 || in_r2(from.size()))) {
                w.erase(w.size() - from.size());
                w += U32(m.to);
            }
            break;
        }
    }

    // Step 4 (in R2).
    {
        static const std::initializer_list<const char32_t*> step4 = {
            U"ement", U"ance", U"ence", U"able", U"ible", U"ment",
            U"ant",   U"ent",  U"ism",  U"ate",  U"iti",  U"ous",
            U"ive",   U"ize",  U"ion",  U"al",   U"er",   U"ic"};
        for (const char32_t* s : step4) {
            const U32 suf(s);
            if (!ends_with(w, suf)) continue;
            if (in_r2(suf.size())) {
                if (suf == u(U"ion")) {
                    if (w.size() > 3 &&
                        (w[w.size() - 4] == U's' || w[w.size() - 4] == U't'))
                        w.erase(w.size() - 3);
                } else {
                    w.erase(w.size() - suf.size());
                }
            }
            break;
        }
    }

    // Step 5.
    {
        const EnRegions reg5 = en_mark_regions(w);
        if (!w.empty() && w.back() == U'e') {
            if (w.size() - 1 >= reg5.r2) {
                w.pop_back();
            } else if (w.size() - 1 >= reg5.r1) {
                U32 head = w.substr(0, w.size() - 1);
                if (!en_short_syllable_at_end(head)) w.pop_back();
            }
        } else if (!w.empty() && w.back() == U'l') {
            if (w.size() - 1 >= reg5.r2 && w.size() >= 2 && w[w.size() - 2] == U'l')
                w.pop_back();
        }
    }

postlude:
    for (auto& c : w)
        if (c == U'Y') c = U'y';
    return utf8_encode(w);
}

}  // namespace

std::string stem_italian(std::string_view word) { return stem_italian_impl(word); }
std::string stem_english(std::string_view word) { return stem_english_impl(word); }

}  // namespace ssna
