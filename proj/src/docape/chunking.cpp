#include "cascade/docape/chunking.hpp"

#include "cascade/core/errors.hpp"
#include "cascade/core/text.hpp"

namespace cascade::docape {

TokenCounter default_token_counter() {
  return [](const std::string& text) { return count_tokens_default(text); };
}

std::vector<DocChunk> chunk_document(const Talk& talk, int budget,
                                     const TokenCounter& counter) {
  if (budget < 1) throw DataError("chunk_document: budget must be >= 1");
  for (const auto& sent : talk.sentences) {
    if (!sent.mt) {
      throw DataError("chunk_document: talk '" + talk.talk_id + "' sentence " +
                      std::to_string(sent.index) + " is missing field 'mt'");
    }
  }

  std::vector<DocChunk> chunks;
  DocChunk current;
  int current_tokens = 0;
  auto flush = [&] {
    if (current.records.empty()) return;
    current.talk_id = talk.talk_id;
    current.chunk_index = static_cast<int>(chunks.size());
    current.first_sentence = current.records.front().index;
    current.last_sentence = current.records.back().index;
    chunks.push_back(std::move(current));
    current = DocChunk{};
    current_tokens = 0;
  };

  for (const auto& sent : talk.sentences) {
    const int tokens = counter(sent.src);
    if (!current.records.empty() && current_tokens + tokens > budget) flush();
    if (current.records.empty() && tokens > budget) {
      current.records.push_back(sent);
      current.oversized = true;
      flush();
      continue;
    }
    current.records.push_back(sent);
    current_tokens += tokens;
  }
  flush();
  return chunks;
}

}  // namespace cascade::docape
