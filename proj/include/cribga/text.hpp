#pragma once

// UTF-8 <-> code point conversion and the small amount of normalization the
// loaders need (trim, lowercase, line splitting).

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cribga/error.hpp"

namespace cribga {

/// A string of symbols, one code point per symbol.
using Text = std::u32string;

namespace text {

inline Text decode_utf8(std::string_view in)
{
    Text out;
    out.reserve(in.size());
    std::size_t i = 0;
    while (i < in.size()) {
        const auto b0 = static_cast<unsigned char>(in[i]);
        std::size_t len = 0;
        char32_t cp = 0;
        if (b0 < 0x80) {
            len = 1;
            cp = b0;
        } else if ((b0 & 0xE0) == 0xC0) {
            len = 2;
            cp = b0 & 0x1F;
        } else if ((b0 & 0xF0) == 0xE0) {
            len = 3;
            cp = b0 & 0x0F;
        } else if ((b0 & 0xF8) == 0xF0) {
            len = 4;
            cp = b0 & 0x07;
        } else {
            throw MalformedInput("invalid UTF-8 lead byte");
        }
        if (i + len > in.size()) {
            throw MalformedInput("truncated UTF-8 sequence");
        }
        for (std::size_t k = 1; k < len; ++k) {
            const auto b = static_cast<unsigned char>(in[i + k]);
            if ((b & 0xC0) != 0x80) {
                throw MalformedInput("invalid UTF-8 continuation byte");
            }
            cp = (cp << 6) | (b & 0x3F);
        }
        out.push_back(cp);
        i += len;
    }
    return out;
}

inline void append_utf8(std::string& out, char32_t cp)
{
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

inline std::string encode_utf8(std::u32string_view in)
{
    std::string out;
    out.reserve(in.size());
    for (char32_t cp : in) {
        append_utf8(out, cp);
    }
    return out;
}

inline bool is_space(char32_t c)
{
    switch (c) {
    case U' ': case U'\t': case U'\n': case U'\r': case U'\v': case U'\f':
    case 0x85: case 0xA0: case 0x1680: case 0x2028: case 0x2029:
    case 0x202F: case 0x205F: case 0x3000: case 0xFEFF:
        return true;
    default:
        return c >= 0x2000 && c <= 0x200A;
    }
}

/// Locale-independent lowercasing for ASCII, Latin-1, Latin Extended-A,
/// Greek and Cyrillic. Anything else passes through unchanged.
inline char32_t to_lower(char32_t c)
{
    if (c >= U'A' && c <= U'Z') {
        return c + 0x20;
    }
    if ((c >= 0xC0 && c <= 0xDE) && c != 0xD7) {
        return c + 0x20;
    }
    if (c >= 0x100 && c <= 0x17F) {
        // Latin Extended-A alternates upper/lower, with the parity flipped in
        // two runs. U+0130 and U+0138 have no simple pair.
        if (c == 0x130 || c == 0x131 || c == 0x138 || c == 0x149 || c == 0x17F) {
            return c;
        }
        if (c == 0x178) {
            return 0xFF;
        }
        const bool odd_upper = (c >= 0x139 && c <= 0x148) || (c >= 0x179 && c <= 0x17E);
        const bool upper = odd_upper ? (c % 2 == 1) : (c % 2 == 0);
        return upper ? c + 1 : c;
    }
    if (c >= 0x391 && c <= 0x3AB && c != 0x3A2) {
        return c + 0x20;
    }
    if (c >= 0x410 && c <= 0x42F) {
        return c + 0x20;
    }
    if (c >= 0x400 && c <= 0x40F) {
        return c + 0x50;
    }
    return c;
}

inline Text to_lower(std::u32string_view in)
{
    Text out(in);
    for (auto& c : out) {
        c = to_lower(c);
    }
    return out;
}

inline std::u32string_view trim(std::u32string_view s)
{
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && is_space(s[b])) {
        ++b;
    }
    while (e > b && is_space(s[e - 1])) {
        --e;
    }
    return s.substr(b, e - b);
}

/// Splits on '\n'. A trailing terminator does not produce an extra line.
inline std::vector<std::string_view> split_lines(std::string_view s)
{
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start < s.size()) {
        auto nl = s.find('\n', start);
        if (nl == std::string_view::npos) {
            lines.push_back(s.substr(start));
            break;
        }
        lines.push_back(s.substr(start, nl - start));
        start = nl + 1;
    }
    return lines;
}

/// One normalized record per line: trimmed, lowercased, with blank and
/// '#'-comment lines dropped. Line numbers are 1-based.
struct Line {
    std::size_t number;
    Text content;
};

inline std::vector<Line> normalized_lines(std::string_view raw)
{
    std::vector<Line> out;
    const auto lines = split_lines(raw);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        Text decoded;
        try {
            decoded = decode_utf8(lines[i]);
        } catch (const MalformedInput& e) {
            throw MalformedInput(e.what(), i + 1);
        }
        auto t = trim(decoded);
        if (t.empty() || t.front() == U'#') {
            continue;
        }
        out.push_back({i + 1, to_lower(t)});
    }
    return out;
}

} // namespace text
} // namespace cribga
