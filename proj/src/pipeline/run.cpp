#include "cascade/pipeline/run.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <map>

#include <nlohmann/json.hpp>

#include "cascade/core/corpus.hpp"
#include "cascade/core/errors.hpp"
#include "cascade/core/text.hpp"
#include "cascade/longform/transcribe.hpp"
#include "cascade/sentseg/segment.hpp"
#include "cascade/util/hash.hpp"
#include "cascade/util/parallel.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using nlohmann::ordered_json;

namespace cascade::pipeline {

int64_t SystemClock::now_ms() {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

StagePaths default_paths(const std::string& out_dir) {
  auto in = [&](const char* name) { return (fs::path(out_dir) / name).string(); };
  StagePaths paths;
  paths.nbest = in("nbest.jsonl");
  paths.asr_transcripts = in("asr_transcripts.jsonl");
  paths.chunk_outputs = in("chunks.jsonl");
  paths.stitch_trace = in("stitch_trace.jsonl");
  paths.refined = in("refined.jsonl");
  paths.refined_transcripts = in("refined_transcripts.jsonl");
  paths.sentences = in("sentences.jsonl");
  paths.translated = in("translated.jsonl");
  paths.postedited = in("postedited.jsonl");
  paths.ape_report = in("ape_report.json");
  paths.eval_report = in("eval_report.json");
  paths.manifest = in("manifest.json");
  return paths;
}

void save_transcripts(
    const std::vector<std::pair<std::string, std::string>>& transcripts,
    const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write transcripts file: " + path);
  for (const auto& [talk_id, text] : transcripts) {
    ordered_json rec;
    rec["talk_id"] = talk_id;
    rec["text"] = text;
    out << rec.dump() << "\n";
  }
}

std::vector<std::pair<std::string, std::string>> load_transcripts(
    const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open transcripts file: " + path);
  std::vector<std::pair<std::string, std::string>> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    const std::string where = path + ":" + std::to_string(lineno);
    try {
      json rec = json::parse(line);
      out.emplace_back(rec.at("talk_id").get<std::string>(),
                       rec.at("text").get<std::string>());
    } catch (const json::exception& e) {
      throw DataError(where + ": malformed transcript record: " + e.what());
    }
  }
  return out;
}

namespace {

std::vector<const Talk*> sorted_by_id(const std::vector<Talk>& talks) {
  std::vector<const Talk*> out;
  for (const auto& t : talks) out.push_back(&t);
  std::sort(out.begin(), out.end(),
            [](const Talk* a, const Talk* b) { return a->talk_id < b->talk_id; });
  return out;
}

std::string utterance_id(const std::string& talk_id, size_t index) {
  return talk_id + ":" + std::to_string(index);
}

// Splits "talk:idx" at the last colon.
std::pair<std::string, int> parse_utterance_id(const std::string& id,
                                               const std::string& where) {
  size_t pos = id.rfind(':');
  if (pos == std::string::npos || pos + 1 >= id.size()) {
    throw DataError(where + ": malformed utterance_id '" + id + "'");
  }
  try {
    return {id.substr(0, pos), std::stoi(id.substr(pos + 1))};
  } catch (const std::exception&) {
    throw DataError(where + ": malformed utterance_id '" + id + "'");
  }
}

void write_longform_artifacts(const std::vector<const Talk*>& talks,
                              const std::vector<longform::LongformResult>& results,
                              const StagePaths& paths) {
  std::ofstream chunks(paths.chunk_outputs, std::ios::binary);
  std::ofstream trace(paths.stitch_trace, std::ios::binary);
  if (!chunks || !trace) {
    throw DataError("cannot write long-form artifacts in " + paths.chunk_outputs);
  }
  for (size_t t = 0; t < talks.size(); ++t) {
    const std::string& id = talks[t]->talk_id;
    for (size_t c = 0; c < results[t].chunks.size(); ++c) {
      const auto& chunk = results[t].chunks[c];
      ordered_json rec;
      rec["talk_id"] = id;
      rec["chunk_index"] = c;
      rec["start_s"] = chunk.span.start_s;
      rec["end_s"] = chunk.span.end_s;
      rec["text"] = chunk.text;
      chunks << rec.dump() << "\n";
    }
    for (const auto& joint : results[t].joints) {
      ordered_json rec;
      rec["talk_id"] = id;
      rec["joint"] = joint.joint;
      rec["left_window"] = joint.left_window;
      rec["right_window"] = joint.right_window;
      rec["match_len"] = joint.match_len;
      rec["cut_left"] = joint.cut_left;
      rec["cut_right"] = joint.cut_right;
      rec["fallback"] = joint.fallback;
      trace << rec.dump() << "\n";
    }
  }
}

}  // namespace

void stage_transcribe(const PipelineConfig& cfg, const std::vector<Talk>& corpus,
                      ASRClient& asr, const StagePaths& paths) {
  auto talks = sorted_by_id(corpus);
  std::vector<std::pair<std::string, std::string>> transcripts;

  if (cfg.long_form) {
    auto results = parallel_map<longform::LongformResult>(
        talks.size(),
        [&](size_t i) { return longform::transcribe_longform(*talks[i], asr, cfg); },
        1 /* chunk-level parallelism lives inside transcribe_longform */);
    for (size_t i = 0; i < talks.size(); ++i) {
      transcripts.emplace_back(talks[i]->talk_id, results[i].transcript);
    }
    write_longform_artifacts(talks, results, paths);
    save_transcripts(transcripts, paths.asr_transcripts);
    return;
  }

  // Segmented route: one utterance per gold segment.
  std::vector<RefNBest> nbest_records;
  for (const Talk* talk : talks) {
    if (talk->segments.empty()) {
      throw DataError("talk '" + talk->talk_id +
                      "' has no segments; segmented decoding needs them "
                      "(or enable long_form)");
    }
    if (!talk->audio) {
      throw DataError("talk '" + talk->talk_id + "' has no audio reference");
    }
    const std::string& path = talk->audio->path;
    auto lists = parallel_map<NBestList>(
        talk->segments.size(),
        [&](size_t i) {
          const Segment& seg = talk->segments[i];
          NBestList nbest =
              asr.transcribe({path, seg.start_s, seg.end_s}, cfg.nbest_k);
          nbest.utterance_id = utterance_id(talk->talk_id, i);
          validate_nbest(nbest, "ASR response for " + nbest.utterance_id);
          return nbest;
        },
        cfg.parallelism);
    std::vector<std::string> rank1;
    for (auto& nbest : lists) {
      rank1.push_back(nbest.hypotheses.front().text);
      nbest_records.push_back({std::move(nbest), std::nullopt});
    }
    transcripts.emplace_back(talk->talk_id, join_tokens(rank1));
  }
  save_nbest_file(nbest_records, paths.nbest);
  save_transcripts(transcripts, paths.asr_transcripts);
}

refine::BatchSummary stage_refine(const PipelineConfig& cfg,
                                  const std::string& nbest_path, LLMClient& llm,
                                  const std::string& refined_path,
                                  const std::string& transcripts_path,
                                  bool strict) {
  auto records = load_nbest_file(nbest_path);
  std::vector<NBestList> lists;
  lists.reserve(records.size());
  for (auto& r : records) lists.push_back(std::move(r.nbest));

  auto summary = refine::batch_refine(lists, llm, cfg);
  if (strict && summary.failed > 0) {
    std::string first;
    for (const auto& item : summary.items) {
      if (item.status == refine::UtteranceStatus::failed) {
        first = item.error.value_or("unknown error");
        break;
      }
    }
    throw BackendError("refinement failed on " + std::to_string(summary.failed) +
                       " utterance(s); first error: " + first);
  }

  std::vector<refine::RefinementResult> results;
  for (const auto& item : summary.items) {
    if (item.status != refine::UtteranceStatus::failed) results.push_back(item.result);
  }
  refine::save_refined_file(results, refined_path);

  if (!transcripts_path.empty()) {
    std::map<std::string, std::map<int, std::string>> by_talk;
    for (const auto& r : results) {
      auto [talk_id, index] = parse_utterance_id(r.utterance_id, refined_path);
      by_talk[talk_id][index] = r.refined;
    }
    std::vector<std::pair<std::string, std::string>> transcripts;
    for (const auto& [talk_id, utterances] : by_talk) {
      std::vector<std::string> texts;
      for (const auto& [index, text] : utterances) texts.push_back(text);
      transcripts.emplace_back(talk_id, join_tokens(texts));
    }
    save_transcripts(transcripts, transcripts_path);
  }
  return summary;
}

void stage_segment(const PipelineConfig& cfg, const std::string& transcripts_path,
                   const std::vector<Talk>& corpus, MTClient* punctuator,
                   const sentseg::SegmentationRules& rules,
                   const std::string& sentences_path) {
  (void)cfg;
  auto transcripts = load_transcripts(transcripts_path);
  std::map<std::string, std::string> by_talk(transcripts.begin(), transcripts.end());

  std::vector<Talk> out;
  for (const Talk* talk : sorted_by_id(corpus)) {
    auto it = by_talk.find(talk->talk_id);
    if (it == by_talk.end()) {
      throw DataError("no transcript for talk '" + talk->talk_id + "' in " +
                      transcripts_path);
    }
    Talk result = *talk;
    result.sentences.clear();
    std::string text = trim(it->second);
    if (!text.empty()) {
      std::string punctuated = sentseg::restore_punctuation(text, punctuator);
      auto sentences = sentseg::split_sentences(punctuated, rules);
      for (size_t i = 0; i < sentences.size(); ++i) {
        SentenceRecord rec;
        rec.index = static_cast<int>(i);
        // Backend text is untrusted; the reserved delimiter must not
        // reach a sentence record.
        rec.src = sanitize_delimiter(sentences[i]);
        result.sentences.push_back(std::move(rec));
      }
    }
    out.push_back(std::move(result));
  }
  save_corpus(out, sentences_path);
}

void stage_translate(const PipelineConfig& cfg, const std::string& sentences_path,
                     MTClient& mt, const std::string& translated_path) {
  auto corpus = load_corpus(sentences_path);
  auto talks = sorted_by_id(corpus);
  auto translated_talks = parallel_map<Talk>(
      talks.size(),
      [&](size_t i) {
        Talk talk = *talks[i];
        if (talk.sentences.empty()) return talk;
        std::vector<std::string> srcs;
        for (const auto& s : talk.sentences) srcs.push_back(s.src);
        auto outs = mt.translate(srcs);
        if (outs.size() != srcs.size()) {
          throw BackendError("MT returned " + std::to_string(outs.size()) +
                             " translations for " + std::to_string(srcs.size()) +
                             " sentences (talk '" + talk.talk_id + "')");
        }
        for (size_t k = 0; k < outs.size(); ++k) {
          talk.sentences[k].mt = sanitize_delimiter(outs[k]);
        }
        return talk;
      },
      cfg.parallelism);
  save_corpus(translated_talks, translated_path);
}

docape::ApeReport stage_docape(const PipelineConfig& cfg,
                               const std::string& translated_path, LLMClient& llm,
                               const std::string& postedited_path,
                               const std::string& report_path) {
  auto corpus = load_corpus(translated_path);
  auto talks = sorted_by_id(corpus);
  auto outcomes = parallel_map<docape::ApeOutcome>(
      talks.size(),
      [&](size_t i) {
        if (talks[i]->sentences.empty()) {
          return docape::ApeOutcome{*talks[i], {}};
        }
        return docape::postedit_document(*talks[i], llm, cfg);
      },
      cfg.parallelism);

  docape::ApeReport total;
  std::vector<Talk> out;
  for (auto& outcome : outcomes) {
    total.chunks += outcome.report.chunks;
    total.postedited += outcome.report.postedited;
    total.fallbacks += outcome.report.fallbacks;
    total.mismatches += outcome.report.mismatches;
    out.push_back(std::move(outcome.talk));
  }
  save_corpus(out, postedited_path);

  if (!report_path.empty()) {
    ordered_json j;
    j["talks"] = talks.size();
    j["chunks"] = total.chunks;
    j["postedited"] = total.postedited;
    j["fallbacks"] = total.fallbacks;
    j["mismatches"] = total.mismatches;
    std::ofstream rep(report_path, std::ios::binary);
    if (!rep) throw DataError("cannot write APE report: " + report_path);
    rep << j.dump(2) << "\n";
  }
  return total;
}

metrics::EvalReport stage_eval(const PipelineConfig& cfg,
                               const std::string& hyp_path,
                               const std::string& ref_path, bool resegment,
                               ScorerClient* scorer,
                               const std::string& report_path) {
  auto hyp = load_corpus(hyp_path);
  auto ref = load_corpus(ref_path);
  metrics::EvalOptions options;
  options.resegment = resegment;
  options.wer_norm = {cfg.wer_lowercase, cfg.wer_strip_punct};
  auto report = metrics::evaluate(hyp, ref, options, scorer);
  if (!report_path.empty()) metrics::save_report(report, report_path);
  return report;
}

namespace {

ordered_json backends_to_json(const PipelineConfig& cfg) {
  ordered_json out = ordered_json::array();
  auto add = [&](const char* kind, const std::string& endpoint, int beam) {
    ordered_json b;
    b["kind"] = kind;
    b["endpoint"] = endpoint;
    b["beam"] = beam;
    out.push_back(std::move(b));
  };
  add("asr", cfg.asr_endpoint, cfg.asr_beam);
  add("mt", cfg.mt_endpoint, cfg.mt_beam);
  add("llm", cfg.llm_endpoint, cfg.llm_beam);
  add("scorer", cfg.scorer_endpoint, 1);
  return out;
}

FileStamp stamp(const std::string& path) {
  return {fs::path(path).filename().string(), hash_file_hex(path)};
}

bool corpus_has_references(const std::vector<Talk>& corpus) {
  bool any = false;
  for (const auto& talk : corpus) {
    for (const auto& sent : talk.sentences) {
      if (!sent.ref) return false;
      any = true;
    }
  }
  return any;
}

}  // namespace

ordered_json manifest_to_json(const RunManifest& manifest) {
  ordered_json j;
  j["run_id"] = manifest.run_id;
  j["config"] = config_to_json(manifest.config);
  ordered_json stages = ordered_json::array();
  for (const auto& stage : manifest.stages) {
    ordered_json s;
    s["name"] = stage.name;
    ordered_json inputs = ordered_json::array();
    for (const auto& in : stage.inputs) {
      inputs.push_back({{"file", in.file}, {"fnv1a64", in.fnv1a64}});
    }
    ordered_json outputs = ordered_json::array();
    for (const auto& out : stage.outputs) {
      outputs.push_back({{"file", out.file}, {"fnv1a64", out.fnv1a64}});
    }
    s["inputs"] = std::move(inputs);
    s["outputs"] = std::move(outputs);
    s["duration_ms"] = stage.duration_ms;
    stages.push_back(std::move(s));
  }
  j["stages"] = std::move(stages);
  j["backends"] = backends_to_json(manifest.config);
  return j;
}

void save_manifest(const RunManifest& manifest, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write manifest: " + path);
  out << manifest_to_json(manifest).dump(2) << "\n";
}

RunManifest run_pipeline(const PipelineConfig& cfg, const std::string& corpus_path,
                         const std::string& out_dir, const Backends& backends,
                         Clock* clock) {
  validate_config(cfg);
  if (!backends.asr) throw DataError("run_pipeline: ASR backend not configured");
  if (!backends.mt) throw DataError("run_pipeline: MT backend not configured");
  SystemClock system_clock;
  Clock& time = clock ? *clock : static_cast<Clock&>(system_clock);

  fs::create_directories(out_dir);
  StagePaths paths = default_paths(out_dir);

  auto corpus = load_corpus(corpus_path);
  const std::string canonical = corpus_to_jsonl(corpus);
  const FileStamp corpus_stamp{fs::path(corpus_path).filename().string(),
                               fnv1a64_hex(canonical)};

  RunManifest manifest;
  manifest.config = cfg;
  manifest.run_id =
      fnv1a64_hex(config_to_json(cfg).dump() + "\n" + corpus_stamp.fnv1a64);

  auto run_stage = [&](const std::string& name, std::vector<FileStamp> inputs,
                       const std::function<void()>& fn,
                       const std::vector<std::string>& output_paths) {
    StageRecord record;
    record.name = name;
    record.inputs = std::move(inputs);
    int64_t t0 = time.now_ms();
    try {
      fn();
    } catch (...) {
      save_manifest(manifest, paths.manifest);  // keep partial progress
      throw;
    }
    record.duration_ms = time.now_ms() - t0;
    for (const auto& p : output_paths) record.outputs.push_back(stamp(p));
    manifest.stages.push_back(std::move(record));
  };

  // ASR
  const bool refine_route = cfg.llm_refine && !cfg.long_form && backends.llm;
  {
    std::vector<std::string> outputs;
    if (cfg.long_form) {
      outputs = {paths.asr_transcripts, paths.chunk_outputs, paths.stitch_trace};
    } else {
      outputs = {paths.nbest, paths.asr_transcripts};
    }
    run_stage("asr", {corpus_stamp},
              [&] { stage_transcribe(cfg, corpus, *backends.asr, paths); }, outputs);
  }

  // N-best refinement (segmented route only)
  std::string transcripts_for_segmentation = paths.asr_transcripts;
  if (refine_route) {
    run_stage("refine", {stamp(paths.nbest)},
              [&] {
                stage_refine(cfg, paths.nbest, *backends.llm, paths.refined,
                             paths.refined_transcripts, /*strict=*/true);
              },
              {paths.refined, paths.refined_transcripts});
    transcripts_for_segmentation = paths.refined_transcripts;
  }

  // Sentence segmentation
  run_stage("segment", {stamp(transcripts_for_segmentation)},
            [&] {
              stage_segment(cfg, transcripts_for_segmentation, corpus,
                            backends.punctuator, sentseg::default_rules(),
                            paths.sentences);
            },
            {paths.sentences});

  // Sentence-level MT
  run_stage("translate", {stamp(paths.sentences)},
            [&] { stage_translate(cfg, paths.sentences, *backends.mt, paths.translated); },
            {paths.translated});

  // Document-level APE
  const bool ape_route = cfg.doc_ape && backends.llm;
  std::string final_output = paths.translated;
  if (ape_route) {
    run_stage("doc-ape", {stamp(paths.translated)},
              [&] {
                stage_docape(cfg, paths.translated, *backends.llm,
                             paths.postedited, paths.ape_report);
              },
              {paths.postedited, paths.ape_report});
    final_output = paths.postedited;
  }

  // Evaluation when the input corpus carries references
  if (corpus_has_references(corpus)) {
    run_stage("eval", {stamp(final_output), corpus_stamp},
              [&] {
                stage_eval(cfg, final_output, corpus_path, /*resegment=*/true,
                           backends.scorer, paths.eval_report);
              },
              {paths.eval_report});
  }

  save_manifest(manifest, paths.manifest);
  return manifest;
}

}  // namespace cascade::pipeline
