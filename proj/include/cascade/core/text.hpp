#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace cascade {

// Sentence separator used by every LLM prompt and SFT completion. Sentence
// text ingested from corpus files must never contain it.
inline constexpr std::string_view kDelimiter = "<SS>";
// Delimiter as it appears between items in prompts and completions.
inline constexpr std::string_view kDelimiterJoin = " <SS> ";

std::vector<std::string> split_whitespace(std::string_view text);

std::string join_tokens(const std::vector<std::string>& tokens,
                        std::string_view sep = " ");

std::string to_lower_ascii(std::string_view text);

std::string trim(std::string_view text);

// Collapses runs of whitespace to single spaces and trims the ends.
std::string collapse_spaces(std::string_view text);

// Default token counter: a token is a maximal run of word characters
// (alphanumeric or non-ASCII bytes) or a single punctuation character.
// Stands in for a backend subword tokenizer; callers may inject their own.
int count_tokens_default(std::string_view text);

bool contains_delimiter(std::string_view text);

// Replaces every "<SS>" occurrence with a space and collapses whitespace.
// Used on backend-produced text before it becomes a SentenceRecord field.
std::string sanitize_delimiter(std::string_view text);

// Splits on the bare "<SS>" delimiter; each piece is whitespace-trimmed.
std::vector<std::string> split_on_delimiter(std::string_view text);

// Returns the text after the last occurrence of `marker`, or the input
// unchanged when the marker is absent. Completion-style backends echo the
// prompt; this strips everything through the echoed template marker.
std::string strip_through_last_marker(std::string_view text,
                                      std::string_view marker);

}  // namespace cascade
