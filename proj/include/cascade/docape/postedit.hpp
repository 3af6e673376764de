#pragma once

#include <string>
#include <vector>

#include "cascade/backends/clients.hpp"
#include "cascade/core/config.hpp"
#include "cascade/core/types.hpp"
#include "cascade/docape/chunking.hpp"
#include "cascade/docape/prompt.hpp"

namespace cascade::docape {

struct ChunkDecision {
  int chunk_index = 0;
  int sentences = 0;
  bool fallback = false;
  std::string reason;  // "mismatch", "length", "repetition" when fallen back
  // payload after this chunk, for inspection and tests
  std::vector<std::pair<std::string, std::string>> payload_after;
};

struct ApeReport {
  int chunks = 0;
  int postedited = 0;
  int fallbacks = 0;
  int mismatches = 0;
  std::vector<ChunkDecision> decisions;
};

struct ApeOutcome {
  Talk talk;  // input talk with the ape field filled on every sentence
  ApeReport report;
};

// Post-edits one talk chunk by chunk, strictly in order, carrying the
// payload window between chunks. On a count mismatch or a degeneracy guard
// hit the chunk keeps its original MT sentences and the payload is built
// from them. The output always has exactly the input sentence count.
// Transport failures abort with the chunk index.
ApeOutcome postedit_document(const Talk& talk, LLMClient& llm,
                             const PipelineConfig& cfg,
                             const TokenCounter& counter = default_token_counter());

}  // namespace cascade::docape
