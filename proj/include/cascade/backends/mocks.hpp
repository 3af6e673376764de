#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "cascade/backends/clients.hpp"
#include "cascade/core/errors.hpp"

namespace cascade {

// Deterministic in-process backends. Every mock is a pure function of its
// construction-time table/callback (and seed, where one applies); tests and
// desk-scale runs rely on that.

// ASR mock keyed on (path, start_s, end_s) at millisecond resolution.
class TableAsrClient : public ASRClient {
 public:
  void add(const std::string& path, double start_s, double end_s,
           std::vector<Hypothesis> hyps);
  NBestList transcribe(const AudioSpan& span, int n_best) override;

 private:
  static std::string key(const std::string& path, double start_s, double end_s);
  std::map<std::string, std::vector<Hypothesis>> table_;
};

class CallbackAsrClient : public ASRClient {
 public:
  using Fn = std::function<NBestList(const AudioSpan&, int)>;
  explicit CallbackAsrClient(Fn fn) : fn_(std::move(fn)) {}
  NBestList transcribe(const AudioSpan& span, int n_best) override {
    return fn_(span, n_best);
  }

 private:
  Fn fn_;
};

class IdentityMtClient : public MTClient {
 public:
  std::vector<std::string> translate(const std::vector<std::string>& sentences) override {
    return sentences;
  }
};

// Word-by-word dictionary translation; unknown words pass through.
class DictionaryMtClient : public MTClient {
 public:
  explicit DictionaryMtClient(std::map<std::string, std::string> dict)
      : dict_(std::move(dict)) {}
  std::vector<std::string> translate(const std::vector<std::string>& sentences) override;

 private:
  std::map<std::string, std::string> dict_;
};

// Sentence-table translation; unknown sentences raise a BackendError.
class TableMtClient : public MTClient {
 public:
  explicit TableMtClient(std::map<std::string, std::string> table)
      : table_(std::move(table)) {}
  std::vector<std::string> translate(const std::vector<std::string>& sentences) override;

 private:
  std::map<std::string, std::string> table_;
};

// Returns pre-scripted batches in call order. Used by the cross-fit noise
// oracle, whose responses cannot be keyed on the (noisy) inputs.
class ScriptedMtClient : public MTClient {
 public:
  explicit ScriptedMtClient(std::vector<std::vector<std::string>> batches)
      : batches_(std::move(batches)) {}
  std::vector<std::string> translate(const std::vector<std::string>& sentences) override;

 private:
  std::mutex mu_;
  size_t next_ = 0;
  std::vector<std::vector<std::string>> batches_;
};

class CallbackMtClient : public MTClient {
 public:
  using Fn = std::function<std::vector<std::string>(const std::vector<std::string>&)>;
  explicit CallbackMtClient(Fn fn) : fn_(std::move(fn)) {}
  std::vector<std::string> translate(const std::vector<std::string>& sentences) override {
    return fn_(sentences);
  }

 private:
  Fn fn_;
};

// Exact prompt -> completion table; unknown prompts raise a BackendError.
class ScriptedLlmClient : public LLMClient {
 public:
  explicit ScriptedLlmClient(std::map<std::string, std::string> table)
      : table_(std::move(table)) {}
  std::string complete(const std::string& prompt) override;

 private:
  std::map<std::string, std::string> table_;
};

class CallbackLlmClient : public LLMClient {
 public:
  using Fn = std::function<std::string(const std::string&)>;
  explicit CallbackLlmClient(Fn fn) : fn_(std::move(fn)) {}
  std::string complete(const std::string& prompt) override { return fn_(prompt); }

 private:
  Fn fn_;
};

// Emits `phrase` repeated `times`, exercising the repetition guards.
class RepetitionLlmClient : public LLMClient {
 public:
  RepetitionLlmClient(std::string phrase, int times)
      : phrase_(std::move(phrase)), times_(times) {}
  std::string complete(const std::string& prompt) override;

 private:
  std::string phrase_;
  int times_;
};

class FixedScorerClient : public ScorerClient {
 public:
  explicit FixedScorerClient(double value) : value_(value) {}
  double score(const std::vector<std::string>&, const std::vector<std::string>&,
               const std::vector<std::string>&) override {
    return value_;
  }

 private:
  double value_;
};

}  // namespace cascade
