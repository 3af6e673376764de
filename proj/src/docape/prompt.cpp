#include "cascade/docape/prompt.hpp"

#include "cascade/core/errors.hpp"
#include "cascade/core/text.hpp"

namespace cascade::docape {

std::string build_ape_prompt(const DocChunk& chunk, const ApeWindowState& state) {
  std::string srcs;
  std::string mts;
  std::string answer;
  auto append = [](std::string& section, const std::string& item) {
    if (!section.empty()) section += kDelimiterJoin;
    section += item;
  };

  for (const auto& [src, edited] : state.payload) {
    append(srcs, src);
    append(mts, edited);
    append(answer, edited);
  }
  for (const auto& rec : chunk.records) {
    if (!rec.mt) {
      throw DataError("build_ape_prompt: talk '" + chunk.talk_id + "' sentence " +
                      std::to_string(rec.index) + " is missing field 'mt'");
    }
    append(srcs, rec.src);
    append(mts, *rec.mt);
  }
  if (!answer.empty()) answer += kDelimiterJoin;

  std::string prompt = "Noisy English Transcript:\n";
  prompt += srcs;
  prompt += "\nGerman Translations:\n";
  prompt += mts;
  prompt += "\n";
  prompt += kApeAnswerMarker;
  prompt += "\n";
  prompt += answer;
  return prompt;
}

ApeParse parse_ape_output(const std::string& raw, int expected,
                          int payload_count) {
  if (expected < 1) throw DataError("parse_ape_output: expected count must be >= 1");
  ApeParse result;
  result.raw = raw;

  // Drop the echoed payload: everything through its final delimiter.
  std::string_view rest = raw;
  for (int i = 0; i < payload_count; ++i) {
    size_t pos = rest.find(kDelimiter);
    if (pos == std::string_view::npos) return result;  // mismatch
    rest = rest.substr(pos + kDelimiter.size());
  }

  auto pieces = split_on_delimiter(rest);
  while (!pieces.empty() && pieces.back().empty()) pieces.pop_back();
  if (static_cast<int>(pieces.size()) != expected) return result;
  for (const auto& piece : pieces) {
    if (piece.empty()) return result;  // blank slots do not align
  }
  result.ok = true;
  result.sentences = std::move(pieces);
  return result;
}

}  // namespace cascade::docape
