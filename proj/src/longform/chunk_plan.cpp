#include "cascade/longform/chunk_plan.hpp"

#include <cmath>
#include <string>

#include "cascade/core/errors.hpp"

namespace cascade::longform {

namespace {
constexpr double kEps = 1e-9;
}

ChunkPlan plan_chunks(double duration_s, double chunk_s, double overlap_s) {
  if (!(duration_s > 0.0)) {
    throw DataError("plan_chunks: duration_s must be positive, got " +
                    std::to_string(duration_s));
  }
  if (!(overlap_s > 0.0) || !(overlap_s < chunk_s)) {
    throw DataError("plan_chunks: need 0 < overlap_s < chunk_s");
  }
  const double stride = chunk_s - overlap_s;
  ChunkPlan plan;
  // start_i = i * stride, computed per index to avoid accumulation drift
  for (size_t i = 0;; ++i) {
    double start = static_cast<double>(i) * stride;
    if (start + chunk_s < duration_s - kEps) {
      plan.spans.push_back({start, start + chunk_s});
    } else {
      plan.spans.push_back({start, duration_s});
      break;
    }
  }
  return plan;
}

void validate_plan(const ChunkPlan& plan, double duration_s, double chunk_s,
                   double overlap_s) {
  if (plan.spans.empty()) throw DataError("chunk plan is empty");
  if (std::abs(plan.spans.front().start_s) > kEps) {
    throw DataError("chunk plan does not start at 0");
  }
  if (std::abs(plan.spans.back().end_s - duration_s) > kEps) {
    throw DataError("chunk plan does not end at the duration");
  }
  for (size_t i = 0; i < plan.spans.size(); ++i) {
    const Span& s = plan.spans[i];
    if (!(s.start_s < s.end_s)) throw DataError("chunk span is empty or inverted");
    if (s.end_s - s.start_s > chunk_s + kEps) {
      throw DataError("chunk span exceeds the chunk length");
    }
    if (i + 1 < plan.spans.size()) {
      const Span& next = plan.spans[i + 1];
      double overlap = s.end_s - next.start_s;
      bool is_last_joint = i + 2 == plan.spans.size();
      if (is_last_joint ? overlap < overlap_s - kEps
                        : std::abs(overlap - overlap_s) > kEps) {
        throw DataError("chunk overlap invariant violated at joint " +
                        std::to_string(i));
      }
    }
  }
}

}  // namespace cascade::longform
