#pragma once

#include <vector>

namespace cascade::longform {

struct Span {
  double start_s = 0.0;
  double end_s = 0.0;
};

// Overlapping decode windows covering [0, duration]. Adjacent spans overlap
// by exactly overlap_s except possibly the final span, which ends at the
// duration and overlaps by at least overlap_s.
struct ChunkPlan {
  std::vector<Span> spans;
};

// Window recurrence start_{i+1} = start_i + (chunk_s - overlap_s); the first
// window reaching the end of the file is clamped to end exactly there.
// Throws DataError on non-positive duration or invalid chunk/overlap.
ChunkPlan plan_chunks(double duration_s, double chunk_s, double overlap_s);

// Checks the cover/overlap invariants; throws DataError when violated.
void validate_plan(const ChunkPlan& plan, double duration_s, double chunk_s,
                   double overlap_s);

}  // namespace cascade::longform
