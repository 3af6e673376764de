#pragma once

#include <string>
#include <vector>

#include "cascade/backends/clients.hpp"
#include "cascade/core/config.hpp"
#include "cascade/core/types.hpp"
#include "cascade/longform/chunk_plan.hpp"
#include "cascade/longform/stitch.hpp"

namespace cascade::longform {

struct ChunkOutput {
  Span span;
  std::string text;  // raw ASR output for this window
};

// Per-joint stitch trace, emitted for debugging.
struct JointTrace {
  size_t joint = 0;  // joins chunk `joint` and chunk `joint + 1`
  std::vector<std::string> left_window;
  std::vector<std::string> right_window;
  size_t match_len = 0;
  size_t cut_left = 0;   // absolute cut into the merged-so-far token stream
  size_t cut_right = 0;  // absolute cut into the right chunk's tokens
  bool fallback = false;
};

struct LongformResult {
  std::string transcript;
  std::vector<ChunkOutput> chunks;
  std::vector<JointTrace> joints;
};

// Plans overlapping windows, transcribes each chunk (concurrently, up to
// cfg.parallelism), and merges transcripts left to right at the overlaps.
// When no common token exists at a joint, both overlap windows are cut at
// their midpoints. ASR failure on any chunk aborts with the chunk span.
LongformResult transcribe_longform(const Talk& talk, ASRClient& asr,
                                   const PipelineConfig& cfg);

}  // namespace cascade::longform
