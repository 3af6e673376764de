#pragma once

#include <string>
#include <vector>

#include "cascade/core/types.hpp"

namespace cascade {

// Uniform client contracts for the external inference services. All
// implementations must be safe for concurrent use.

struct AudioSpan {
  std::string path;
  double start_s = 0.0;
  double end_s = 0.0;
};

class ASRClient {
 public:
  virtual ~ASRClient() = default;
  // Returns an ordered N-best list with non-increasing scores.
  virtual NBestList transcribe(const AudioSpan& span, int n_best) = 0;
};

class MTClient {
 public:
  virtual ~MTClient() = default;
  // 1:1 order-preserving translations of the input sentences.
  virtual std::vector<std::string> translate(const std::vector<std::string>& sentences) = 0;
};

class LLMClient {
 public:
  virtual ~LLMClient() = default;
  virtual std::string complete(const std::string& prompt) = 0;
};

class ScorerClient {
 public:
  virtual ~ScorerClient() = default;
  // Corpus-level score over aligned (src, hyp, ref) triples.
  virtual double score(const std::vector<std::string>& srcs,
                       const std::vector<std::string>& hyps,
                       const std::vector<std::string>& refs) = 0;
};

}  // namespace cascade
