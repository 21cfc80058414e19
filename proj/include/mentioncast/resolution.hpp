#pragma once

#include <string>
#include <string_view>

#include "mentioncast/domain.hpp"

namespace mentioncast {

// How keyword occurrences are matched against a transcript. The default
// (case-insensitive, word-boundary) mirrors how title-cased contract keywords
// behave against real transcription styles; the strict readings are available
// through the other combinations.
struct MatchMode {
    enum class Case { Sensitive, Insensitive };
    enum class Boundary { Substring, WordBoundary };

    Case case_sensitivity = Case::Insensitive;
    Boundary boundary = Boundary::WordBoundary;

    bool operator==(const MatchMode&) const = default;
};

std::string match_mode_tag(const MatchMode& mode);       // e.g. "ci-word"
MatchMode match_mode_from_tag(std::string_view tag);     // throws ValidationError

// Canonicalize text for matching: fold every Unicode whitespace run (tabs,
// newlines, NBSP, the general-punctuation spaces) to a single ASCII space,
// trim the ends, and lowercase ASCII/Latin-1 letters when the mode is
// case-insensitive. Other code points pass through untouched, so text is
// compared in whatever composed form it arrived in.
std::string normalize_text(std::string_view text, const MatchMode& mode);

// Settle one contract: YES iff the normalized keyword occurs in the
// normalized transcript under the mode's boundary rule. Word-boundary matches
// must not be flanked by letters, digits, hyphens, or apostrophes.
// Throws ValidationError when the keyword is empty after trimming.
Outcome resolve_mention(std::string_view keyword, std::string_view transcript,
                        const MatchMode& mode = {});

// True when the code point counts as a word constituent for the boundary
// test. Exposed for the resolution tests' independent scan.
bool is_word_codepoint(uint32_t cp);

}  // namespace mentioncast
