#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cascade/backends/clients.hpp"
#include "cascade/core/config.hpp"
#include "cascade/core/types.hpp"

namespace cascade::refine {

struct RefinementResult {
  std::string utterance_id;
  std::string refined;
  bool used_fallback = false;
  std::optional<std::string> reason;  // "length", "repetition" or "empty"
};

// Prompts the LLM with the top-k candidates and returns the refined
// transcript. Degenerate output (too long relative to the longest candidate,
// or a repeating token loop) falls back to the rank-1 hypothesis verbatim;
// guard firing is not an error. Transport failures propagate.
RefinementResult refine_transcript(const NBestList& nbest, LLMClient& llm,
                                   const PipelineConfig& cfg);

enum class UtteranceStatus { refined, fallback, failed };

struct BatchItem {
  RefinementResult result;
  UtteranceStatus status = UtteranceStatus::refined;
  std::optional<std::string> error;  // set when status == failed
};

struct BatchSummary {
  std::vector<BatchItem> items;  // input order
  int refined = 0;
  int fallbacks = 0;
  int failed = 0;
};

// Order-preserving concurrent map of refine_transcript; per-utterance
// transport failures are collected and the run continues.
BatchSummary batch_refine(const std::vector<NBestList>& corpus, LLMClient& llm,
                          const PipelineConfig& cfg);

// refined.jsonl: {utterance_id, refined, used_fallback, reason?}
void save_refined_file(const std::vector<RefinementResult>& results,
                       const std::string& path);
std::vector<RefinementResult> load_refined_file(const std::string& path);

}  // namespace cascade::refine
