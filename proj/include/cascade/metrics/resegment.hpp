#pragma once

#include <string>
#include <vector>

namespace cascade::metrics {

struct ResegmentResult {
  // One piece per reference segment; pieces partition the hypothesis stream.
  std::vector<std::vector<std::string>> pieces;
  // boundaries[i] is the end position of piece i in the hypothesis stream
  // (boundaries.back() == hyp size).
  std::vector<size_t> boundaries;
  int total_cost = 0;  // summed word edit distance against the references
};

// Cuts the hypothesis word stream into |ref_segments| contiguous (possibly
// empty) pieces minimizing the summed word edit distance to the corresponding
// reference segments. Ties resolve to the lexicographically earliest boundary
// vector. Dynamic programming over boundary positions; O(K * N^2 * max|ref|),
// intended for per-talk evaluation scale.
ResegmentResult mwer_resegment(const std::vector<std::string>& hyp_words,
                               const std::vector<std::vector<std::string>>& ref_segments);

}  // namespace cascade::metrics
