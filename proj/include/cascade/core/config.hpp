#pragma once

#include <cstdint>
#include <string>

#include <nlohmann/json_fwd.hpp>

namespace cascade {

// Flat pipeline configuration. Field defaults are the working constants of
// the whole toolkit; validate_config() checks the invariants and every
// loader fills absent fields with these defaults.
struct PipelineConfig {
  // candidate selection and prompting
  int nbest_k = 5;
  int token_budget = 256;
  int payload_sentences = 2;

  // long-form decoding
  double chunk_s = 30.0;
  double overlap_s = 10.0;
  int stitch_window_tokens = 20;

  // decode params forwarded to backends
  int asr_beam = 5;
  int mt_beam = 5;
  int llm_beam = 3;
  int max_new_tokens = 512;

  // degenerate-output guard
  double degeneracy_factor = 1.5;
  int repeat_window = 4;
  int repeat_min_count = 3;

  // WER normalization
  bool wer_lowercase = true;
  bool wer_strip_punct = true;

  // per-run routing
  bool long_form = false;
  bool llm_refine = true;
  bool doc_ape = true;

  // backend endpoints (empty = not configured)
  std::string asr_endpoint;
  std::string mt_endpoint;
  std::string llm_endpoint;
  std::string scorer_endpoint;
  std::string punctuator_endpoint;

  // transport
  double timeout_s = 30.0;
  int max_retries = 2;
  int retry_backoff_ms = 100;
  int parallelism = 4;

  uint64_t seed = 0;
};

// Checks all invariants; throws DataError naming the offending field.
PipelineConfig validate_config(const PipelineConfig& cfg);

// Parses a flat JSON object; absent keys keep defaults, unknown keys are
// rejected. The result is validated.
PipelineConfig parse_config(const nlohmann::json& doc, const std::string& where);

PipelineConfig load_config(const std::string& path);

// Canonical snapshot with stable key order, embedded in run manifests.
nlohmann::ordered_json config_to_json(const PipelineConfig& cfg);

}  // namespace cascade
