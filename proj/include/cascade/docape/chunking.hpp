#pragma once

#include <functional>
#include <string>
#include <vector>

#include "cascade/core/types.hpp"

namespace cascade::docape {

// Counts tokens of one sentence; injected so a real subword counter can
// replace the default whitespace-plus-punctuation one.
using TokenCounter = std::function<int(const std::string&)>;

TokenCounter default_token_counter();

// Greedy packing in sentence order: a sentence joins the open chunk while
// the chunk's source token count stays within the budget; a single sentence
// over the budget forms its own chunk, flagged oversized. Chunks partition
// the talk's sentences. Requires src and mt on every sentence.
std::vector<DocChunk> chunk_document(const Talk& talk, int budget,
                                     const TokenCounter& counter);

}  // namespace cascade::docape
