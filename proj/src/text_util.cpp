#include "darkdetect/text_util.hpp"

#include <array>

namespace darkdetect::text {

namespace {

// Expected byte count for a UTF-8 lead byte, 0 for invalid leads.
int sequence_length(unsigned char lead) {
    if (lead < 0x80) return 1;
    if (lead < 0xC2) return 0;  // continuation or overlong lead
    if (lead < 0xE0) return 2;
    if (lead < 0xF0) return 3;
    if (lead < 0xF5) return 4;
    return 0;
}

bool is_continuation(unsigned char b) { return (b & 0xC0) == 0x80; }

// Decodes one sequence at pos. Returns the code point and advances pos, or
// returns nullopt with pos untouched when the sequence is malformed.
std::optional<char32_t> decode_one(std::string_view s, std::size_t& pos) {
    unsigned char lead = static_cast<unsigned char>(s[pos]);
    int len = sequence_length(lead);
    if (len == 0 || pos + static_cast<std::size_t>(len) > s.size()) return std::nullopt;
    if (len == 1) {
        ++pos;
        return static_cast<char32_t>(lead);
    }
    char32_t cp = lead & (0x7F >> len);
    for (int i = 1; i < len; ++i) {
        unsigned char b = static_cast<unsigned char>(s[pos + static_cast<std::size_t>(i)]);
        if (!is_continuation(b)) return std::nullopt;
        cp = (cp << 6) | (b & 0x3F);
    }
    // Overlong forms, surrogates, out of range.
    static constexpr std::array<char32_t, 5> kMin = {0, 0, 0x80, 0x800, 0x10000};
    if (cp < kMin[static_cast<std::size_t>(len)]) return std::nullopt;
    if (cp >= 0xD800 && cp <= 0xDFFF) return std::nullopt;
    if (cp > 0x10FFFF) return std::nullopt;
    pos += static_cast<std::size_t>(len);
    return cp;
}

}  // namespace

bool Utf8Cursor::next(char32_t& cp) {
    if (pos_ >= bytes_.size()) return false;
    auto decoded = decode_one(bytes_, pos_);
    if (decoded) {
        cp = *decoded;
    } else {
        cp = kReplacementChar;
        ++pos_;
    }
    return true;
}

std::optional<std::size_t> find_invalid_utf8(std::string_view bytes) {
    std::size_t pos = 0;
    while (pos < bytes.size()) {
        std::size_t at = pos;
        if (!decode_one(bytes, pos)) return at;
    }
    return std::nullopt;
}

void append_utf8(std::string& out, char32_t cp) {
    if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) cp = kReplacementChar;
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

bool is_space(char32_t cp) {
    return cp == U' ' || cp == U'\t' || cp == U'\n' || cp == U'\r' ||
           cp == U'\f' || cp == U'\v' || cp == U' ';
}

bool is_ascii_digit(char32_t cp) { return cp >= U'0' && cp <= U'9'; }

namespace {

struct Range {
    char32_t lo, hi;
};

// Letter ranges, loosely following the Unicode L* categories for the
// scripts listed in the header.
constexpr Range kLetterRanges[] = {
    {0x0041, 0x005A}, {0x0061, 0x007A},
    {0x00C0, 0x00D6}, {0x00D8, 0x00F6}, {0x00F8, 0x024F},  // Latin-1 + Ext-A/B
    {0x0370, 0x037D}, {0x037F, 0x03FF},                    // Greek (minus U+037E)
    {0x0400, 0x04FF},                                      // Cyrillic
    {0x0530, 0x058F},                                      // Armenian
    {0x05D0, 0x05EA},                                      // Hebrew
    {0x0620, 0x064A},                                      // Arabic
    {0x3041, 0x3096}, {0x30A1, 0x30FA},                    // kana
    {0x4E00, 0x9FFF},                                      // CJK unified
    {0xAC00, 0xD7A3},                                      // Hangul
};

// ASCII punctuation plus the Unicode punctuation blocks common in web text.
constexpr Range kPunctRanges[] = {
    {0x0021, 0x002F}, {0x003A, 0x0040}, {0x005B, 0x0060}, {0x007B, 0x007E},
    {0x00A1, 0x00A7}, {0x00AB, 0x00AB}, {0x00B6, 0x00B7},
    {0x00BB, 0x00BB}, {0x00BF, 0x00BF},
    {0x037E, 0x037E},
    {0x2010, 0x2027}, {0x2030, 0x205E},  // general punctuation
    {0x3001, 0x3003}, {0x3008, 0x3011}, {0x3014, 0x301F},  // CJK punctuation
    {0xFF01, 0xFF0F}, {0xFF1A, 0xFF20}, {0xFF3B, 0xFF40},
    {0xFF5B, 0xFF65},  // fullwidth forms
};

bool in_ranges(char32_t cp, const Range* ranges, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        if (cp >= ranges[i].lo && cp <= ranges[i].hi) return true;
    }
    return false;
}

}  // namespace

bool is_letter(char32_t cp) {
    return in_ranges(cp, kLetterRanges, std::size(kLetterRanges));
}

bool is_alnum(char32_t cp) { return is_ascii_digit(cp) || is_letter(cp); }

bool is_punct(char32_t cp) {
    return in_ranges(cp, kPunctRanges, std::size(kPunctRanges));
}

char32_t to_lower(char32_t cp) {
    if (cp >= U'A' && cp <= U'Z') return cp + 0x20;
    // Latin-1 uppercase block, skipping the multiplication sign.
    if (cp >= 0x00C0 && cp <= 0x00DE && cp != 0x00D7) return cp + 0x20;
    // Latin Extended-A pairs, with the handful of irregular entries.
    if (cp >= 0x0100 && cp <= 0x017F) {
        if (cp == 0x0130) return 0x0069;  // I with dot above
        if (cp == 0x0131 || cp == 0x0138 || cp == 0x0149) return cp;
        if (cp == 0x0178) return 0x00FF;  // Y with diaeresis
        if (cp >= 0x0139 && cp <= 0x0148) return (cp % 2 == 1) ? cp + 1 : cp;
        if (cp >= 0x014A && cp <= 0x0177) return (cp % 2 == 0) ? cp + 1 : cp;
        if (cp >= 0x0179 && cp <= 0x017E) return (cp % 2 == 1) ? cp + 1 : cp;
        return (cp % 2 == 0) ? cp + 1 : cp;
    }
    if (cp >= 0x0391 && cp <= 0x03AB && cp != 0x03A2) return cp + 0x20;  // Greek
    if (cp >= 0x0410 && cp <= 0x042F) return cp + 0x20;                  // Cyrillic
    if (cp >= 0x0400 && cp <= 0x040F) return cp + 0x50;
    return cp;
}

std::string to_lower_copy(std::string_view utf8) {
    std::string out;
    out.reserve(utf8.size());
    Utf8Cursor cur(utf8);
    char32_t cp;
    while (cur.next(cp)) append_utf8(out, to_lower(cp));
    return out;
}

std::string collapse_whitespace(std::string_view utf8) {
    std::string out;
    out.reserve(utf8.size());
    bool pending_space = false;
    Utf8Cursor cur(utf8);
    char32_t cp;
    while (cur.next(cp)) {
        if (is_space(cp)) {
            if (!out.empty()) pending_space = true;
            continue;
        }
        if (pending_space) {
            out.push_back(' ');
            pending_space = false;
        }
        append_utf8(out, cp);
    }
    return out;
}

std::string_view trim_view(std::string_view s) {
    const char* ws = " \t\r\n\f\v";
    std::size_t b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    std::size_t e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

std::string trim_copy(std::string_view s) { return std::string(trim_view(s)); }

bool iequals_ascii(std::string_view a, std::string_view b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        char ca = a[i], cb = b[i];
        if (ca >= 'A' && ca <= 'Z') ca = static_cast<char>(ca + 0x20);
        if (cb >= 'A' && cb <= 'Z') cb = static_cast<char>(cb + 0x20);
        if (ca != cb) return false;
    }
    return true;
}

std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : data) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace darkdetect::text
