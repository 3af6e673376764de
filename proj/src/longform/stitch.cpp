#include "cascade/longform/stitch.hpp"

#include "cascade/core/errors.hpp"
#include "cascade/core/text.hpp"

namespace cascade::longform {

StitchResult stitch_pair(const std::vector<std::string>& left,
                         const std::vector<std::string>& right,
                         size_t window) {
  if (left.empty() || right.empty()) {
    throw DataError("stitch_pair requires non-empty token sequences");
  }
  if (window == 0) throw DataError("stitch_pair window must be >= 1");

  const size_t wl = std::min(window, left.size());
  const size_t wr = std::min(window, right.size());
  const size_t left_off = left.size() - wl;

  std::vector<std::string> lw(wl), rw(wr);
  for (size_t i = 0; i < wl; ++i) lw[i] = to_lower_ascii(left[left_off + i]);
  for (size_t j = 0; j < wr; ++j) rw[j] = to_lower_ascii(right[j]);

  // run[i][j]: length of the common run ending at lw[i-1], rw[j-1]
  std::vector<std::vector<size_t>> run(wl + 1, std::vector<size_t>(wr + 1, 0));
  size_t best_len = 0;
  size_t best_left_end = 0;  // window-relative end (exclusive)
  size_t best_right_end = 0;
  for (size_t i = 1; i <= wl; ++i) {
    for (size_t j = 1; j <= wr; ++j) {
      if (lw[i - 1] != rw[j - 1]) continue;
      size_t len = run[i - 1][j - 1] + 1;
      run[i][j] = len;
      size_t right_start = j - len;
      bool better = false;
      if (len > best_len) {
        better = true;
      } else if (len == best_len && len > 0) {
        if (i > best_left_end) {
          better = true;
        } else if (i == best_left_end && right_start < best_right_end - best_len) {
          better = true;
        }
      }
      if (better) {
        best_len = len;
        best_left_end = i;
        best_right_end = j;
      }
    }
  }

  StitchResult result;
  if (best_len == 0) {
    result.cut_left = left.size();
    result.cut_right = 0;
    result.match_len = 0;
    return result;
  }
  result.match_len = best_len;
  result.cut_left = left_off + best_left_end;
  result.cut_right = best_right_end;
  return result;
}

}  // namespace cascade::longform
