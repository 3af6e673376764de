#pragma once

#include <memory>
#include <string>

#include "cascade/backends/clients.hpp"
#include "cascade/backends/profile.hpp"
#include "cascade/util/parallel.hpp"

namespace cascade {

// JSON-over-HTTP clients. Wire schemas (documented in the README):
//   POST /transcribe {audio, start_s, end_s, n_best} -> {hypotheses: [{text, score}]}
//   POST /translate  {sentences: [..]}               -> {translations: [..]}
//   POST /complete   {prompt, beam, max_new_tokens}  -> {text}
//   POST /score      {srcs, hyps, refs}              -> {score}
// Transport failures (connect/timeout/5xx) are retried max_retries times
// with exponential backoff, then raise BackendError. Malformed responses and
// 4xx statuses are protocol errors and are not retried. In-flight requests
// per client never exceed profile.parallelism.

class HttpAsrClient : public ASRClient {
 public:
  explicit HttpAsrClient(BackendProfile profile);
  NBestList transcribe(const AudioSpan& span, int n_best) override;

 private:
  BackendProfile profile_;
  Semaphore limiter_;
};

class HttpMtClient : public MTClient {
 public:
  explicit HttpMtClient(BackendProfile profile);
  std::vector<std::string> translate(const std::vector<std::string>& sentences) override;

 private:
  BackendProfile profile_;
  Semaphore limiter_;
};

class HttpLlmClient : public LLMClient {
 public:
  explicit HttpLlmClient(BackendProfile profile);
  std::string complete(const std::string& prompt) override;

 private:
  BackendProfile profile_;
  Semaphore limiter_;
};

class HttpScorerClient : public ScorerClient {
 public:
  explicit HttpScorerClient(BackendProfile profile);
  double score(const std::vector<std::string>& srcs,
               const std::vector<std::string>& hyps,
               const std::vector<std::string>& refs) override;

 private:
  BackendProfile profile_;
  Semaphore limiter_;
};

}  // namespace cascade
