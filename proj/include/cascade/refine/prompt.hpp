#pragma once

#include <string>

#include "cascade/core/types.hpp"

namespace cascade::refine {

// Marker the completion must follow; also used to strip echoed prompts.
inline constexpr std::string_view kAnswerMarker = "Post-edited Hypothesis:";

// Builds the transcript-refinement prompt from the top min(k, |nbest|)
// candidates, joined by " <SS> " in rank order (never shuffled). Byte-stable
// across runs. Throws DataError on an empty list or k < 1.
std::string build_asr_prompt(const NBestList& nbest, int k);

}  // namespace cascade::refine
