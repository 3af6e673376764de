#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "cascade/backends/clients.hpp"
#include "cascade/core/config.hpp"
#include "cascade/core/types.hpp"
#include "cascade/docape/postedit.hpp"
#include "cascade/metrics/evaluate.hpp"
#include "cascade/refine/refine.hpp"
#include "cascade/sentseg/rules.hpp"

namespace cascade::pipeline {

// Inference services for one run; any may be a mock. Owned by the caller.
struct Backends {
  ASRClient* asr = nullptr;
  MTClient* mt = nullptr;
  LLMClient* llm = nullptr;
  ScorerClient* scorer = nullptr;
  MTClient* punctuator = nullptr;
};

// Injectable time source so manifests are reproducible under test clocks.
class Clock {
 public:
  virtual ~Clock() = default;
  virtual int64_t now_ms() = 0;
};

class SystemClock : public Clock {
 public:
  int64_t now_ms() override;
};

// Monotonic counter; two identically-seeded runs see identical timestamps.
class FakeClock : public Clock {
 public:
  int64_t now_ms() override { return counter_++; }

 private:
  int64_t counter_ = 0;
};

struct FileStamp {
  std::string file;  // basename, so manifests compare across run directories
  std::string fnv1a64;
};

struct StageRecord {
  std::string name;
  std::vector<FileStamp> inputs;
  std::vector<FileStamp> outputs;
  int64_t duration_ms = 0;
};

struct RunManifest {
  std::string run_id;  // derived from config + input hashes; reproducible
  PipelineConfig config;
  std::vector<StageRecord> stages;
};

nlohmann::ordered_json manifest_to_json(const RunManifest& manifest);
void save_manifest(const RunManifest& manifest, const std::string& path);

// Output layout inside a run directory.
struct StagePaths {
  std::string nbest;
  std::string asr_transcripts;
  std::string chunk_outputs;
  std::string stitch_trace;
  std::string refined;
  std::string refined_transcripts;
  std::string sentences;
  std::string translated;
  std::string postedited;
  std::string ape_report;
  std::string eval_report;
  std::string manifest;
};

StagePaths default_paths(const std::string& out_dir);

// Stage functions; the CLI subcommands and run_pipeline share these, so a
// piped stage-by-stage run reproduces the monolithic artifacts bit-exactly.

// ASR over gold segments (nbest.jsonl + rank-1 transcripts), or chunked
// long-form decoding (transcripts + per-chunk outputs + stitch trace).
void stage_transcribe(const PipelineConfig& cfg, const std::vector<Talk>& corpus,
                      ASRClient& asr, const StagePaths& paths);

// N-best refinement; writes refined.jsonl and per-talk transcripts built
// from the refined utterances. Throws on any failed utterance when `strict`.
refine::BatchSummary stage_refine(const PipelineConfig& cfg,
                                  const std::string& nbest_path, LLMClient& llm,
                                  const std::string& refined_path,
                                  const std::string& transcripts_path,
                                  bool strict);

// Punctuation restoration (optional client) + rule segmentation; writes a
// corpus file with src-only sentence records.
void stage_segment(const PipelineConfig& cfg, const std::string& transcripts_path,
                   const std::vector<Talk>& corpus, MTClient* punctuator,
                   const sentseg::SegmentationRules& rules,
                   const std::string& sentences_path);

void stage_translate(const PipelineConfig& cfg, const std::string& sentences_path,
                     MTClient& mt, const std::string& translated_path);

docape::ApeReport stage_docape(const PipelineConfig& cfg,
                               const std::string& translated_path, LLMClient& llm,
                               const std::string& postedited_path,
                               const std::string& report_path);

metrics::EvalReport stage_eval(const PipelineConfig& cfg,
                               const std::string& hyp_path,
                               const std::string& ref_path, bool resegment,
                               ScorerClient* scorer,
                               const std::string& report_path);

// Full cascade: ASR (segmented or long-form) -> optional N-best refinement
// -> segmentation -> MT -> optional document APE -> evaluation when the
// input corpus carries references. Per-set routing honors cfg.long_form,
// cfg.llm_refine and cfg.doc_ape (refinement is never applied on the
// long-form route). A stage failure aborts; the manifest written so far is
// flushed with the partial progress.
RunManifest run_pipeline(const PipelineConfig& cfg, const std::string& corpus_path,
                         const std::string& out_dir, const Backends& backends,
                         Clock* clock = nullptr);

// transcripts.jsonl helpers: {talk_id, text}
void save_transcripts(const std::vector<std::pair<std::string, std::string>>& transcripts,
                      const std::string& path);
std::vector<std::pair<std::string, std::string>> load_transcripts(const std::string& path);

}  // namespace cascade::pipeline
