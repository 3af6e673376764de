#include "cascade/docape/postedit.hpp"

#include "cascade/core/errors.hpp"
#include "cascade/core/text.hpp"
#include "cascade/refine/degeneracy.hpp"

namespace cascade::docape {

namespace {

// Guard reference length: the chunk's MT section as the model sees it,
// delimiters included, so both sides count alike.
int mt_section_tokens(const DocChunk& chunk, const TokenCounter& counter) {
  std::string joined;
  for (const auto& rec : chunk.records) {
    if (!joined.empty()) joined += kDelimiterJoin;
    joined += *rec.mt;
  }
  return counter(joined);
}

}  // namespace

ApeOutcome postedit_document(const Talk& talk, LLMClient& llm,
                             const PipelineConfig& cfg,
                             const TokenCounter& counter) {
  ApeOutcome outcome;
  outcome.talk = talk;

  auto chunks = chunk_document(talk, cfg.token_budget, counter);
  outcome.report.chunks = static_cast<int>(chunks.size());

  const refine::DegeneracyGuard guard{cfg.degeneracy_factor, cfg.repeat_window,
                                      cfg.repeat_min_count};
  ApeWindowState state;
  state.talk_id = talk.talk_id;

  for (const auto& chunk : chunks) {
    const int expected = static_cast<int>(chunk.records.size());
    const std::string prompt = build_ape_prompt(chunk, state);

    std::string raw;
    try {
      raw = llm.complete(prompt);
    } catch (const BackendError& e) {
      throw BackendError("doc APE failed on talk '" + talk.talk_id + "' chunk " +
                         std::to_string(chunk.chunk_index) + ": " + e.what());
    }

    // Completion backends may echo the whole prompt.
    std::string answer = strip_through_last_marker(raw, kApeAnswerMarker);

    ChunkDecision decision;
    decision.chunk_index = chunk.chunk_index;
    decision.sentences = expected;

    std::vector<std::string> edited;
    auto guard_reason = guard.check(answer, mt_section_tokens(chunk, counter));
    if (guard_reason) {
      decision.fallback = true;
      decision.reason = *guard_reason;
    } else {
      ApeParse parsed = parse_ape_output(answer, expected,
                                         static_cast<int>(state.payload.size()));
      if (!parsed.ok) {
        decision.fallback = true;
        decision.reason = "mismatch";
        ++outcome.report.mismatches;
      } else {
        edited = std::move(parsed.sentences);
      }
    }

    if (decision.fallback) {
      ++outcome.report.fallbacks;
      edited.clear();
      for (const auto& rec : chunk.records) edited.push_back(*rec.mt);
    } else {
      ++outcome.report.postedited;
    }

    for (int i = 0; i < expected; ++i) {
      outcome.talk.sentences[static_cast<size_t>(chunk.first_sentence + i)].ape =
          edited[static_cast<size_t>(i)];
    }

    // Slide the payload window over this chunk's emitted pairs.
    for (int i = 0; i < expected; ++i) {
      state.payload.emplace_back(chunk.records[static_cast<size_t>(i)].src,
                                 edited[static_cast<size_t>(i)]);
    }
    const size_t keep = static_cast<size_t>(cfg.payload_sentences);
    if (state.payload.size() > keep) {
      state.payload.erase(state.payload.begin(),
                          state.payload.end() - static_cast<long>(keep));
    }
    state.next_chunk = chunk.chunk_index + 1;
    decision.payload_after = state.payload;
    outcome.report.decisions.push_back(std::move(decision));
  }

  return outcome;
}

}  // namespace cascade::docape
