#include "cascade/refine/prompt.hpp"

#include "cascade/core/errors.hpp"
#include "cascade/core/text.hpp"

namespace cascade::refine {

std::string build_asr_prompt(const NBestList& nbest, int k) {
  if (nbest.hypotheses.empty()) {
    throw DataError("build_asr_prompt: empty N-best list for utterance '" +
                    nbest.utterance_id + "'");
  }
  if (k < 1) throw DataError("build_asr_prompt: k must be >= 1");

  const size_t count = std::min<size_t>(static_cast<size_t>(k), nbest.hypotheses.size());
  std::string prompt =
      "Punctuate and Post-edit the hypothesis\n"
      "based on the predictions:\n";
  for (size_t i = 0; i < count; ++i) {
    if (i > 0) prompt += kDelimiterJoin;
    prompt += nbest.hypotheses[i].text;
  }
  prompt += "\n";
  prompt += kAnswerMarker;
  prompt += "\n";
  return prompt;
}

}  // namespace cascade::refine
