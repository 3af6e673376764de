#pragma once

#include <optional>
#include <string>
#include <vector>

namespace cascade::refine {

// True when some `window`-token block occurs at least `min_count` times
// back to back.
bool has_consecutive_repeat(const std::vector<std::string>& tokens,
                            int window, int min_count);

// Guard against degenerate LLM output (endless repetition loops, runaway
// length). `reference_tokens` is the longest input candidate for transcript
// refinement, or the chunk's translation length for document post-editing.
struct DegeneracyGuard {
  double factor = 1.5;
  int repeat_window = 4;
  int repeat_min_count = 3;

  // Returns the firing reason ("length" or "repetition"), or nullopt when
  // the output is acceptable.
  std::optional<std::string> check(const std::string& output,
                                   int reference_tokens) const;
};

}  // namespace cascade::refine
