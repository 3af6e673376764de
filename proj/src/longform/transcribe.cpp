#include "cascade/longform/transcribe.hpp"

#include <sstream>

#include "cascade/core/errors.hpp"
#include "cascade/core/text.hpp"
#include "cascade/util/parallel.hpp"

namespace cascade::longform {

LongformResult transcribe_longform(const Talk& talk, ASRClient& asr,
                                   const PipelineConfig& cfg) {
  if (!talk.audio || !talk.audio->duration_s) {
    throw DataError("talk '" + talk.talk_id +
                    "' has no audio duration; long-form decoding needs one");
  }
  ChunkPlan plan = plan_chunks(*talk.audio->duration_s, cfg.chunk_s, cfg.overlap_s);

  const std::string& path = talk.audio->path;
  auto texts = parallel_map<std::string>(
      plan.spans.size(),
      [&](size_t i) {
        const Span& span = plan.spans[i];
        try {
          NBestList nbest = asr.transcribe({path, span.start_s, span.end_s}, 1);
          validate_nbest(nbest, "ASR response for " + talk.talk_id);
          return nbest.hypotheses.front().text;
        } catch (const BackendError& e) {
          std::ostringstream msg;
          msg << "ASR failed on talk '" << talk.talk_id << "' chunk ["
              << span.start_s << ", " << span.end_s << "]: " << e.what();
          throw BackendError(msg.str());
        }
      },
      cfg.parallelism);

  LongformResult result;
  for (size_t i = 0; i < plan.spans.size(); ++i) {
    result.chunks.push_back({plan.spans[i], texts[i]});
  }

  const size_t window = static_cast<size_t>(cfg.stitch_window_tokens);
  std::vector<std::string> merged = split_whitespace(texts.empty() ? "" : texts[0]);
  for (size_t i = 1; i < texts.size(); ++i) {
    std::vector<std::string> right = split_whitespace(texts[i]);
    JointTrace trace;
    trace.joint = i - 1;
    if (right.empty()) {
      trace.cut_left = merged.size();
      result.joints.push_back(std::move(trace));
      continue;
    }
    if (merged.empty()) {
      merged = std::move(right);
      result.joints.push_back(std::move(trace));
      continue;
    }

    const size_t wl = std::min(window, merged.size());
    const size_t wr = std::min(window, right.size());
    trace.left_window.assign(merged.end() - static_cast<long>(wl), merged.end());
    trace.right_window.assign(right.begin(), right.begin() + static_cast<long>(wr));

    StitchResult cut = stitch_pair(merged, right, window);
    if (cut.match_len == 0) {
      // midpoint fallback: bounded duplication, guaranteed progress
      cut.cut_left = merged.size() - wl / 2;
      cut.cut_right = wr / 2;
      trace.fallback = true;
    }
    trace.match_len = cut.match_len;
    trace.cut_left = cut.cut_left;
    trace.cut_right = cut.cut_right;

    merged.resize(cut.cut_left);
    merged.insert(merged.end(), right.begin() + static_cast<long>(cut.cut_right),
                  right.end());
    result.joints.push_back(std::move(trace));
  }

  result.transcript = join_tokens(merged);
  return result;
}

}  // namespace cascade::longform
