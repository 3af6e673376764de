#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace cascade::longform {

// Where to cut two adjacent chunk transcripts so the shared token run
// appears exactly once: keep left[0, cut_left), then right[cut_right, ...).
// The run ends at cut_left in the left sequence (its surface form wins) and
// everything through the run's occurrence in the right sequence is dropped.
struct StitchResult {
  size_t cut_left = 0;
  size_t cut_right = 0;
  size_t match_len = 0;  // 0: no common token; callers apply their fallback
};

// Longest common contiguous token run between the last `window` tokens of
// `left` and the first `window` tokens of `right`, matched case-folded.
// Ties: latest end in left, then earliest position in right. With no match,
// returns identity cuts (cut_left = |left|, cut_right = 0) and match_len 0.
StitchResult stitch_pair(const std::vector<std::string>& left,
                         const std::vector<std::string>& right,
                         size_t window = 20);

}  // namespace cascade::longform
