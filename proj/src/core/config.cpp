#include "cascade/core/config.hpp"

#include <fstream>
#include <set>

#include <nlohmann/json.hpp>

#include "cascade/core/errors.hpp"

namespace cascade {

namespace {

void fail(const std::string& where, const std::string& msg) {
  throw DataError(where + ": " + msg);
}

}  // namespace

PipelineConfig validate_config(const PipelineConfig& cfg) {
  const std::string where = "config";
  if (cfg.nbest_k < 1) fail(where, "nbest_k must be >= 1");
  if (cfg.token_budget < 1) fail(where, "token_budget must be >= 1");
  if (cfg.payload_sentences < 0) fail(where, "payload_sentences must be >= 0");
  if (!(cfg.overlap_s > 0.0) || !(cfg.overlap_s < cfg.chunk_s)) {
    fail(where, "overlap_s must satisfy 0 < overlap_s < chunk_s");
  }
  if (cfg.stitch_window_tokens < 1) fail(where, "stitch_window_tokens must be >= 1");
  if (cfg.asr_beam < 1 || cfg.mt_beam < 1 || cfg.llm_beam < 1) {
    fail(where, "beam sizes must be >= 1");
  }
  if (cfg.nbest_k > cfg.asr_beam) {
    fail(where, "nbest_k cannot exceed asr_beam");
  }
  if (cfg.max_new_tokens < 1) fail(where, "max_new_tokens must be >= 1");
  if (!(cfg.degeneracy_factor > 1.0)) {
    fail(where, "degeneracy_factor must be > 1");
  }
  if (cfg.repeat_window < 1) fail(where, "repeat_window must be >= 1");
  if (cfg.repeat_min_count < 2) fail(where, "repeat_min_count must be >= 2");
  if (!(cfg.timeout_s > 0.0)) fail(where, "timeout_s must be > 0");
  if (cfg.max_retries < 0) fail(where, "max_retries must be >= 0");
  if (cfg.retry_backoff_ms < 0) fail(where, "retry_backoff_ms must be >= 0");
  if (cfg.parallelism < 1) fail(where, "parallelism must be >= 1");
  return cfg;
}

PipelineConfig parse_config(const nlohmann::json& doc, const std::string& where) {
  if (!doc.is_object()) fail(where, "config must be a JSON object");
  PipelineConfig cfg;

  std::set<std::string> seen;
  auto take = [&](const char* key, auto& field) {
    if (doc.contains(key)) {
      seen.insert(key);
      try {
        doc.at(key).get_to(field);
      } catch (const nlohmann::json::exception&) {
        fail(where, std::string("field '") + key + "' has the wrong type");
      }
    }
  };

  take("nbest_k", cfg.nbest_k);
  take("token_budget", cfg.token_budget);
  take("payload_sentences", cfg.payload_sentences);
  take("chunk_s", cfg.chunk_s);
  take("overlap_s", cfg.overlap_s);
  take("stitch_window_tokens", cfg.stitch_window_tokens);
  take("asr_beam", cfg.asr_beam);
  take("mt_beam", cfg.mt_beam);
  take("llm_beam", cfg.llm_beam);
  take("max_new_tokens", cfg.max_new_tokens);
  take("degeneracy_factor", cfg.degeneracy_factor);
  take("repeat_window", cfg.repeat_window);
  take("repeat_min_count", cfg.repeat_min_count);
  take("wer_lowercase", cfg.wer_lowercase);
  take("wer_strip_punct", cfg.wer_strip_punct);
  take("long_form", cfg.long_form);
  take("llm_refine", cfg.llm_refine);
  take("doc_ape", cfg.doc_ape);
  take("asr_endpoint", cfg.asr_endpoint);
  take("mt_endpoint", cfg.mt_endpoint);
  take("llm_endpoint", cfg.llm_endpoint);
  take("scorer_endpoint", cfg.scorer_endpoint);
  take("punctuator_endpoint", cfg.punctuator_endpoint);
  take("timeout_s", cfg.timeout_s);
  take("max_retries", cfg.max_retries);
  take("retry_backoff_ms", cfg.retry_backoff_ms);
  take("parallelism", cfg.parallelism);
  take("seed", cfg.seed);

  for (const auto& [key, value] : doc.items()) {
    (void)value;
    if (!seen.count(key)) fail(where, "unknown config key '" + key + "'");
  }
  return validate_config(cfg);
}

PipelineConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open config file: " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw DataError(path + ": invalid JSON: " + e.what());
  }
  return parse_config(doc, path);
}

nlohmann::ordered_json config_to_json(const PipelineConfig& cfg) {
  nlohmann::ordered_json j;
  j["nbest_k"] = cfg.nbest_k;
  j["token_budget"] = cfg.token_budget;
  j["payload_sentences"] = cfg.payload_sentences;
  j["chunk_s"] = cfg.chunk_s;
  j["overlap_s"] = cfg.overlap_s;
  j["stitch_window_tokens"] = cfg.stitch_window_tokens;
  j["asr_beam"] = cfg.asr_beam;
  j["mt_beam"] = cfg.mt_beam;
  j["llm_beam"] = cfg.llm_beam;
  j["max_new_tokens"] = cfg.max_new_tokens;
  j["degeneracy_factor"] = cfg.degeneracy_factor;
  j["repeat_window"] = cfg.repeat_window;
  j["repeat_min_count"] = cfg.repeat_min_count;
  j["wer_lowercase"] = cfg.wer_lowercase;
  j["wer_strip_punct"] = cfg.wer_strip_punct;
  j["long_form"] = cfg.long_form;
  j["llm_refine"] = cfg.llm_refine;
  j["doc_ape"] = cfg.doc_ape;
  j["asr_endpoint"] = cfg.asr_endpoint;
  j["mt_endpoint"] = cfg.mt_endpoint;
  j["llm_endpoint"] = cfg.llm_endpoint;
  j["scorer_endpoint"] = cfg.scorer_endpoint;
  j["punctuator_endpoint"] = cfg.punctuator_endpoint;
  j["timeout_s"] = cfg.timeout_s;
  j["max_retries"] = cfg.max_retries;
  j["retry_backoff_ms"] = cfg.retry_backoff_ms;
  j["parallelism"] = cfg.parallelism;
  j["seed"] = cfg.seed;
  return j;
}

}  // namespace cascade
