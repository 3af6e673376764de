#include "cascade/backends/http.hpp"

#include <chrono>
#include <thread>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "cascade/core/errors.hpp"

using nlohmann::json;

namespace cascade {

namespace {

// POSTs a JSON body, retrying transport failures. Returns the parsed body.
json post_json(const BackendProfile& profile, const std::string& route,
               const json& request) {
  validate_profile(profile);
  const std::string body = request.dump();

  std::string last_error;
  for (int attempt = 0; attempt <= profile.max_retries; ++attempt) {
    if (attempt > 0) {
      int backoff = profile.retry_backoff_ms << (attempt - 1);
      std::this_thread::sleep_for(std::chrono::milliseconds(backoff));
    }
    httplib::Client client(profile.endpoint);
    const auto timeout_ms =
        std::chrono::milliseconds(static_cast<long long>(profile.timeout_s * 1000.0));
    client.set_connection_timeout(timeout_ms);
    client.set_read_timeout(timeout_ms);
    client.set_write_timeout(timeout_ms);

    auto res = client.Post(route, body, "application/json");
    if (!res) {
      last_error = "transport error: " + httplib::to_string(res.error());
      continue;
    }
    if (res->status >= 500) {
      last_error = "server error: HTTP " + std::to_string(res->status);
      continue;
    }
    if (res->status != 200) {
      throw BackendError(std::string(backend_kind_name(profile.kind)) + " " +
                         profile.endpoint + route + ": HTTP " +
                         std::to_string(res->status));
    }
    try {
      return json::parse(res->body);
    } catch (const json::exception& e) {
      throw BackendError(std::string(backend_kind_name(profile.kind)) + " " +
                         profile.endpoint + route +
                         ": malformed JSON response: " + e.what());
    }
  }
  throw BackendError(std::string(backend_kind_name(profile.kind)) + " " +
                     profile.endpoint + route + " failed after " +
                     std::to_string(profile.max_retries + 1) + " attempts: " +
                     last_error);
}

}  // namespace

HttpAsrClient::HttpAsrClient(BackendProfile profile)
    : profile_(std::move(profile)), limiter_(profile_.parallelism) {
  profile_.kind = BackendKind::asr;
}

NBestList HttpAsrClient::transcribe(const AudioSpan& span, int n_best) {
  if (n_best < 1 || n_best > profile_.beam) {
    throw DataError("asr_transcribe: n_best (" + std::to_string(n_best) +
                    ") must be in [1, beam=" + std::to_string(profile_.beam) + "]");
  }
  SemaphoreGuard guard(limiter_);
  json request = {{"audio", span.path},
                  {"start_s", span.start_s},
                  {"end_s", span.end_s},
                  {"n_best", n_best}};
  json response = post_json(profile_, "/transcribe", request);

  NBestList out;
  out.utterance_id =
      span.path + ":" + std::to_string(span.start_s) + "-" + std::to_string(span.end_s);
  if (!response.contains("hypotheses") || !response["hypotheses"].is_array() ||
      response["hypotheses"].empty()) {
    throw BackendError("asr response lacks a non-empty 'hypotheses' array");
  }
  for (const auto& h : response["hypotheses"]) {
    if (!h.is_object() || !h.contains("text") || !h.contains("score")) {
      throw BackendError("asr response hypothesis lacks 'text'/'score'");
    }
    out.hypotheses.push_back({h["text"].get<std::string>(), h["score"].get<double>()});
  }
  validate_nbest(out, "asr response");
  return out;
}

HttpMtClient::HttpMtClient(BackendProfile profile)
    : profile_(std::move(profile)), limiter_(profile_.parallelism) {
  profile_.kind = BackendKind::mt;
}

std::vector<std::string> HttpMtClient::translate(
    const std::vector<std::string>& sentences) {
  if (sentences.empty()) throw DataError("mt_translate: sentence list is empty");
  SemaphoreGuard guard(limiter_);
  json request = {{"sentences", sentences}};
  json response = post_json(profile_, "/translate", request);
  if (!response.contains("translations") || !response["translations"].is_array()) {
    throw BackendError("mt response lacks a 'translations' array");
  }
  std::vector<std::string> out;
  for (const auto& t : response["translations"]) {
    if (!t.is_string()) throw BackendError("mt response translation is not a string");
    out.push_back(t.get<std::string>());
  }
  if (out.size() != sentences.size()) {
    throw BackendError("mt response count mismatch: sent " +
                       std::to_string(sentences.size()) + ", received " +
                       std::to_string(out.size()));
  }
  return out;
}

HttpLlmClient::HttpLlmClient(BackendProfile profile)
    : profile_(std::move(profile)), limiter_(profile_.parallelism) {
  profile_.kind = BackendKind::llm;
}

std::string HttpLlmClient::complete(const std::string& prompt) {
  if (prompt.empty()) throw DataError("llm_complete: prompt is empty");
  SemaphoreGuard guard(limiter_);
  json request = {{"prompt", prompt},
                  {"beam", profile_.beam},
                  {"max_new_tokens", profile_.max_new_tokens}};
  json response = post_json(profile_, "/complete", request);
  if (!response.contains("text") || !response["text"].is_string()) {
    throw BackendError("llm response lacks a 'text' string");
  }
  return response["text"].get<std::string>();
}

HttpScorerClient::HttpScorerClient(BackendProfile profile)
    : profile_(std::move(profile)), limiter_(profile_.parallelism) {
  profile_.kind = BackendKind::scorer;
}

double HttpScorerClient::score(const std::vector<std::string>& srcs,
                               const std::vector<std::string>& hyps,
                               const std::vector<std::string>& refs) {
  if (hyps.size() != refs.size() || srcs.size() != hyps.size()) {
    throw DataError("scorer: srcs/hyps/refs must have equal sizes");
  }
  SemaphoreGuard guard(limiter_);
  json request = {{"srcs", srcs}, {"hyps", hyps}, {"refs", refs}};
  json response = post_json(profile_, "/score", request);
  if (!response.contains("score") || !response["score"].is_number()) {
    throw BackendError("scorer response lacks a numeric 'score'");
  }
  return response["score"].get<double>();
}

}  // namespace cascade
