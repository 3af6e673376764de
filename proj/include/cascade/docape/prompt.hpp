#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cascade/core/types.hpp"

namespace cascade::docape {

inline constexpr std::string_view kApeAnswerMarker = "Post-Edited German Translations:";

// Sliding-window decode state for one talk: the last post-edited sentence
// pairs of the previously emitted output, carried as committed context.
struct ApeWindowState {
  std::string talk_id;
  int next_chunk = 0;
  // (source sentence, post-edited target) pairs, oldest first
  std::vector<std::pair<std::string, std::string>> payload;
};

// Builds the post-editing prompt: the payload pairs are prepended to all
// three sections and pre-filled in the answer section (followed by a
// trailing delimiter) so the model continues after them. With an empty
// payload the answer section is empty.
std::string build_ape_prompt(const DocChunk& chunk, const ApeWindowState& state);

struct ApeParse {
  bool ok = false;
  std::vector<std::string> sentences;
  std::string raw;  // original output, kept when the counts mismatch
};

// Strips the echoed payload (everything through the payload's final
// delimiter), splits on "<SS>" and trims. Returns the sentences when the
// count matches `expected`, otherwise a mismatch signal carrying the raw
// output. Count mismatch is a signal, not an error.
ApeParse parse_ape_output(const std::string& raw, int expected,
                          int payload_count = 0);

}  // namespace cascade::docape
