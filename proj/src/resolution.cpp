#include "mentioncast/resolution.hpp"

#include <cstdint>

#include "mentioncast/errors.hpp"

namespace mentioncast {

namespace {

// Decode one UTF-8 code point starting at `pos`. Invalid sequences are
// consumed one byte at a time and reported as that byte's value, so arbitrary
// input never derails the scan.
uint32_t decode_utf8(std::string_view s, size_t pos, size_t& length) {
    const auto byte = [&](size_t i) { return static_cast<unsigned char>(s[i]); };
    const unsigned char b0 = byte(pos);
    length = 1;
    if (b0 < 0x80) return b0;

    auto continuation = [&](size_t i) {
        return i < s.size() && (byte(i) & 0xC0) == 0x80;
    };
    if ((b0 & 0xE0) == 0xC0 && continuation(pos + 1)) {
        length = 2;
        return (uint32_t{b0} & 0x1F) << 6 | (byte(pos + 1) & 0x3F);
    }
    if ((b0 & 0xF0) == 0xE0 && continuation(pos + 1) && continuation(pos + 2)) {
        length = 3;
        return (uint32_t{b0} & 0x0F) << 12 | (uint32_t{byte(pos + 1)} & 0x3F) << 6 |
               (byte(pos + 2) & 0x3F);
    }
    if ((b0 & 0xF8) == 0xF0 && continuation(pos + 1) && continuation(pos + 2) &&
        continuation(pos + 3)) {
        length = 4;
        return (uint32_t{b0} & 0x07) << 18 | (uint32_t{byte(pos + 1)} & 0x3F) << 12 |
               (uint32_t{byte(pos + 2)} & 0x3F) << 6 | (byte(pos + 3) & 0x3F);
    }
    return b0;
}

void encode_utf8(uint32_t cp, std::string& out) {
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

bool is_space_codepoint(uint32_t cp) {
    switch (cp) {
        case 0x09: case 0x0A: case 0x0B: case 0x0C: case 0x0D: case 0x20:
        case 0x85: case 0xA0: case 0x1680:
        case 0x2028: case 0x2029: case 0x202F: case 0x205F: case 0x3000:
            return true;
        default:
            return cp >= 0x2000 && cp <= 0x200A;
    }
}

uint32_t fold_case(uint32_t cp) {
    if (cp >= 'A' && cp <= 'Z') return cp + 0x20;
    // Latin-1 supplement uppercase letters, excluding the multiplication sign.
    if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 0x20;
    return cp;
}

// Code point that starts at or covers byte position `pos` when walking
// backwards: steps over UTF-8 continuation bytes.
uint32_t codepoint_before(std::string_view s, size_t pos) {
    size_t start = pos;
    while (start > 0 && (static_cast<unsigned char>(s[start - 1]) & 0xC0) == 0x80) --start;
    if (start == 0 && (static_cast<unsigned char>(s[0]) & 0xC0) == 0x80) {
        return static_cast<unsigned char>(s[0]);
    }
    size_t len = 0;
    return decode_utf8(s, start > 0 ? start - 1 : 0, len);
}

}  // namespace

bool is_word_codepoint(uint32_t cp) {
    if (cp >= '0' && cp <= '9') return true;
    if (cp >= 'a' && cp <= 'z') return true;
    if (cp >= 'A' && cp <= 'Z') return true;
    if (cp == '-' || cp == '\'') return true;
    // Anything non-ASCII that survived whitespace folding counts as part of a
    // word; boundaries are only ever formed by ASCII punctuation and spaces.
    return cp >= 0x80;
}

std::string match_mode_tag(const MatchMode& mode) {
    std::string tag = mode.case_sensitivity == MatchMode::Case::Insensitive ? "ci" : "cs";
    tag += mode.boundary == MatchMode::Boundary::WordBoundary ? "-word" : "-substring";
    return tag;
}

MatchMode match_mode_from_tag(std::string_view tag) {
    MatchMode mode;
    if (tag == "ci-word") {
        mode = {MatchMode::Case::Insensitive, MatchMode::Boundary::WordBoundary};
    } else if (tag == "cs-word") {
        mode = {MatchMode::Case::Sensitive, MatchMode::Boundary::WordBoundary};
    } else if (tag == "ci-substring") {
        mode = {MatchMode::Case::Insensitive, MatchMode::Boundary::Substring};
    } else if (tag == "cs-substring") {
        mode = {MatchMode::Case::Sensitive, MatchMode::Boundary::Substring};
    } else {
        throw ValidationError("unknown match mode \"" + std::string(tag) +
                              "\"; expected ci-word, cs-word, ci-substring, or cs-substring");
    }
    return mode;
}

std::string normalize_text(std::string_view text, const MatchMode& mode) {
    const bool fold = mode.case_sensitivity == MatchMode::Case::Insensitive;
    std::string out;
    out.reserve(text.size());
    bool pending_space = false;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t len = 0;
        uint32_t cp = decode_utf8(text, pos, len);
        pos += len;
        if (is_space_codepoint(cp)) {
            pending_space = !out.empty();
            continue;
        }
        if (pending_space) {
            out.push_back(' ');
            pending_space = false;
        }
        encode_utf8(fold ? fold_case(cp) : cp, out);
    }
    return out;
}

Outcome resolve_mention(std::string_view keyword, std::string_view transcript,
                        const MatchMode& mode) {
    const std::string needle = normalize_text(keyword, mode);
    if (needle.empty()) {
        throw ValidationError("keyword is empty after trimming");
    }
    const std::string haystack = normalize_text(transcript, mode);

    size_t from = 0;
    while (true) {
        const size_t at = haystack.find(needle, from);
        if (at == std::string::npos) return Outcome::No;
        if (mode.boundary == MatchMode::Boundary::Substring) return Outcome::Yes;

        const bool left_ok = at == 0 || !is_word_codepoint(codepoint_before(haystack, at));
        const size_t end = at + needle.size();
        bool right_ok = true;
        if (end < haystack.size()) {
            size_t len = 0;
            right_ok = !is_word_codepoint(decode_utf8(haystack, end, len));
        }
        if (left_ok && right_ok) return Outcome::Yes;
        from = at + 1;
    }
}

}  // namespace mentioncast
