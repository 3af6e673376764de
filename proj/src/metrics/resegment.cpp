#include "cascade/metrics/resegment.hpp"

#include <limits>

#include "cascade/core/errors.hpp"

namespace cascade::metrics {

namespace {

constexpr int kInf = std::numeric_limits<int>::max() / 2;

// edit(H[p..c), R) for every c in [p..N], computed row by row: extending the
// piece by one hypothesis word adds one DP row.
std::vector<int> piece_costs(const std::vector<std::string>& hyp, size_t p,
                             const std::vector<std::string>& ref) {
  const size_t n = ref.size();
  const size_t len = hyp.size() - p;
  std::vector<int> row(n + 1);
  for (size_t j = 0; j <= n; ++j) row[j] = static_cast<int>(j);
  std::vector<int> out;
  out.reserve(len + 1);
  out.push_back(row[n]);  // empty piece: |ref| insertions
  for (size_t i = 1; i <= len; ++i) {
    int prev_diag = row[0];
    row[0] = static_cast<int>(i);
    for (size_t j = 1; j <= n; ++j) {
      int diag = prev_diag + (hyp[p + i - 1] == ref[j - 1] ? 0 : 1);
      prev_diag = row[j];
      int del = row[j] + 1;
      int ins = row[j - 1] + 1;
      row[j] = diag < del ? (diag < ins ? diag : ins) : (del < ins ? del : ins);
    }
    out.push_back(row[n]);
  }
  return out;
}

}  // namespace

ResegmentResult mwer_resegment(
    const std::vector<std::string>& hyp_words,
    const std::vector<std::vector<std::string>>& ref_segments) {
  if (ref_segments.empty()) {
    throw DataError("mwer_resegment requires at least one reference segment");
  }
  const size_t n = hyp_words.size();
  const size_t k = ref_segments.size();

  // suffix[s][p] = min cost of aligning H[p..N) to segments s..K-1, with the
  // final piece forced to end at N.
  std::vector<std::vector<int>> suffix(k + 1, std::vector<int>(n + 1, kInf));
  suffix[k][n] = 0;
  for (size_t s = k; s-- > 0;) {
    for (size_t p = 0; p <= n; ++p) {
      auto costs = piece_costs(hyp_words, p, ref_segments[s]);
      int best = kInf;
      for (size_t c = p; c <= n; ++c) {
        int tail = suffix[s + 1][c];
        if (tail >= kInf) continue;
        int total = costs[c - p] + tail;
        if (total < best) best = total;
      }
      suffix[s][p] = best;
    }
  }

  ResegmentResult result;
  result.total_cost = suffix[0][0];
  size_t p = 0;
  for (size_t s = 0; s < k; ++s) {
    auto costs = piece_costs(hyp_words, p, ref_segments[s]);
    size_t chosen = n;
    // earliest boundary achieving the optimum
    for (size_t c = p; c <= n; ++c) {
      if (suffix[s + 1][c] >= kInf) continue;
      if (costs[c - p] + suffix[s + 1][c] == suffix[s][p]) {
        chosen = c;
        break;
      }
    }
    result.pieces.emplace_back(hyp_words.begin() + static_cast<long>(p),
                               hyp_words.begin() + static_cast<long>(chosen));
    result.boundaries.push_back(chosen);
    p = chosen;
  }
  return result;
}

}  // namespace cascade::metrics
