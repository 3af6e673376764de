#include "cascade/backends/mocks.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "cascade/core/text.hpp"

namespace cascade {

std::string TableAsrClient::key(const std::string& path, double start_s,
                                double end_s) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "|%lld|%lld",
                static_cast<long long>(std::llround(start_s * 1000.0)),
                static_cast<long long>(std::llround(end_s * 1000.0)));
  return path + buf;
}

void TableAsrClient::add(const std::string& path, double start_s, double end_s,
                         std::vector<Hypothesis> hyps) {
  table_[key(path, start_s, end_s)] = std::move(hyps);
}

NBestList TableAsrClient::transcribe(const AudioSpan& span, int n_best) {
  auto it = table_.find(key(span.path, span.start_s, span.end_s));
  if (it == table_.end()) {
    std::ostringstream msg;
    msg << "mock ASR has no entry for " << span.path << " [" << span.start_s
        << ", " << span.end_s << "]";
    throw BackendError(msg.str());
  }
  NBestList out;
  std::ostringstream id;
  id << span.path << ":" << span.start_s << "-" << span.end_s;
  out.utterance_id = id.str();
  int n = std::min<int>(n_best, static_cast<int>(it->second.size()));
  out.hypotheses.assign(it->second.begin(), it->second.begin() + n);
  return out;
}

std::vector<std::string> DictionaryMtClient::translate(
    const std::vector<std::string>& sentences) {
  std::vector<std::string> out;
  out.reserve(sentences.size());
  for (const auto& sent : sentences) {
    auto words = split_whitespace(sent);
    for (auto& w : words) {
      auto it = dict_.find(w);
      if (it != dict_.end()) w = it->second;
    }
    out.push_back(join_tokens(words));
  }
  return out;
}

std::vector<std::string> TableMtClient::translate(
    const std::vector<std::string>& sentences) {
  std::vector<std::string> out;
  out.reserve(sentences.size());
  for (const auto& sent : sentences) {
    auto it = table_.find(sent);
    if (it == table_.end()) {
      throw BackendError("mock MT has no entry for sentence: " + sent);
    }
    out.push_back(it->second);
  }
  return out;
}

std::vector<std::string> ScriptedMtClient::translate(
    const std::vector<std::string>& sentences) {
  std::lock_guard<std::mutex> lock(mu_);
  if (next_ >= batches_.size()) {
    throw BackendError("scripted MT exhausted after " +
                       std::to_string(batches_.size()) + " batches");
  }
  const auto& batch = batches_[next_++];
  if (batch.size() != sentences.size()) {
    throw BackendError("scripted MT batch size " + std::to_string(batch.size()) +
                       " does not match request size " +
                       std::to_string(sentences.size()));
  }
  return batch;
}

std::string ScriptedLlmClient::complete(const std::string& prompt) {
  auto it = table_.find(prompt);
  if (it == table_.end()) {
    throw BackendError("mock LLM has no entry for prompt (" +
                       std::to_string(prompt.size()) + " bytes)");
  }
  return it->second;
}

std::string RepetitionLlmClient::complete(const std::string&) {
  std::string out;
  for (int i = 0; i < times_; ++i) {
    if (i > 0) out += ' ';
    out += phrase_;
  }
  return out;
}

}  // namespace cascade
