#include "cascade/synth/sft.hpp"

#include <algorithm>
#include <fstream>

#include <nlohmann/json.hpp>

#include "cascade/backends/mocks.hpp"
#include "cascade/core/errors.hpp"
#include "cascade/core/text.hpp"
#include "cascade/docape/prompt.hpp"
#include "cascade/refine/prompt.hpp"
#include "cascade/synth/noise.hpp"
#include "cascade/util/hash.hpp"

using nlohmann::json;
using nlohmann::ordered_json;

namespace cascade::synth {

namespace {

std::vector<const Talk*> sorted_by_id(const std::vector<Talk>& talks) {
  std::vector<const Talk*> out;
  out.reserve(talks.size());
  for (const auto& t : talks) out.push_back(&t);
  std::sort(out.begin(), out.end(),
            [](const Talk* a, const Talk* b) { return a->talk_id < b->talk_id; });
  return out;
}

int count_delimiters(const std::string& text) {
  int n = 0;
  size_t pos = 0;
  while ((pos = text.find(kDelimiter, pos)) != std::string::npos) {
    ++n;
    pos += kDelimiter.size();
  }
  return n;
}

SftTask task_from_name(const std::string& name, const std::string& where) {
  if (name == "asr_refine") return SftTask::asr_refine;
  if (name == "doc_ape") return SftTask::doc_ape;
  throw DataError(where + ": unknown field 'task' value '" + name + "'");
}

Half half_from_name(const std::string& name, const std::string& where) {
  if (name == "A") return Half::A;
  if (name == "B") return Half::B;
  throw DataError(where + ": unknown half '" + name + "'");
}

}  // namespace

const char* half_name(Half half) { return half == Half::A ? "A" : "B"; }

std::pair<std::vector<Talk>, std::vector<Talk>> split_halves(
    const std::vector<Talk>& talks) {
  if (talks.size() < 2) {
    throw DataError("split_halves requires at least two talks, got " +
                    std::to_string(talks.size()));
  }
  auto sorted = sorted_by_id(talks);
  std::pair<std::vector<Talk>, std::vector<Talk>> halves;
  for (size_t i = 0; i < sorted.size(); ++i) {
    (i % 2 == 0 ? halves.first : halves.second).push_back(*sorted[i]);
  }
  return halves;
}

AsrSftResult make_asr_sft(const std::vector<RefNBest>& corpus, int k) {
  if (k < 1) throw DataError("make_asr_sft: k must be >= 1");
  AsrSftResult result;
  for (const auto& item : corpus) {
    if (!item.ref) {
      ++result.skipped_missing_ref;
      continue;
    }
    SftRecord rec;
    rec.task = SftTask::asr_refine;
    rec.prompt = refine::build_asr_prompt(item.nbest, k);
    rec.completion = *item.ref;
    rec.meta.talk_id = item.nbest.utterance_id;
    result.records.push_back(std::move(rec));
  }
  return result;
}

std::vector<SftRecord> make_ape_sft(
    const std::vector<Talk>& talks, int budget,
    const docape::TokenCounter& counter,
    const std::map<std::string, std::pair<Half, Half>>* halves) {
  std::vector<SftRecord> records;
  for (const Talk* talk : sorted_by_id(talks)) {
    for (const auto& sent : talk->sentences) {
      if (!sent.mt || !sent.ref) {
        throw DataError("make_ape_sft: talk '" + talk->talk_id + "' sentence " +
                        std::to_string(sent.index) +
                        " is missing field '" + (sent.mt ? "ref" : "mt") + "'");
      }
    }
    auto chunks = docape::chunk_document(*talk, budget, counter);
    for (const auto& chunk : chunks) {
      SftRecord rec;
      rec.task = SftTask::doc_ape;
      docape::ApeWindowState empty_state;
      empty_state.talk_id = talk->talk_id;
      rec.prompt = docape::build_ape_prompt(chunk, empty_state);
      std::string completion;
      for (const auto& r : chunk.records) {
        if (!completion.empty()) completion += kDelimiterJoin;
        completion += *r.ref;
      }
      rec.completion = completion;
      if (count_delimiters(completion) !=
          static_cast<int>(chunk.records.size()) - 1) {
        throw DataError("make_ape_sft: talk '" + talk->talk_id +
                        "' chunk completion delimiter count is off");
      }
      rec.meta.talk_id = talk->talk_id;
      rec.meta.chunk_index = chunk.chunk_index;
      rec.meta.first_sentence = chunk.first_sentence;
      rec.meta.last_sentence = chunk.last_sentence;
      if (halves) {
        auto it = halves->find(talk->talk_id);
        if (it != halves->end()) {
          rec.meta.half = it->second.first;
          rec.meta.model_half = it->second.second;
        }
      }
      records.push_back(std::move(rec));
    }
  }
  return records;
}

std::vector<AudioSpan> utterance_spans(const Talk& talk) {
  const std::string path = talk.audio ? talk.audio->path : talk.talk_id;
  std::vector<AudioSpan> spans;
  spans.reserve(talk.sentences.size());
  if (talk.segments.size() == talk.sentences.size()) {
    for (const auto& seg : talk.segments) {
      spans.push_back({path, seg.start_s, seg.end_s});
    }
  } else {
    for (size_t i = 0; i < talk.sentences.size(); ++i) {
      spans.push_back({path, static_cast<double>(i), static_cast<double>(i + 1)});
    }
  }
  return spans;
}

namespace {

Talk infer_talk(const Talk& talk, ASRClient& asr, MTClient& mt) {
  Talk out = talk;
  auto spans = utterance_spans(talk);
  std::vector<std::string> noisy_srcs;
  noisy_srcs.reserve(spans.size());
  for (size_t i = 0; i < spans.size(); ++i) {
    NBestList nbest = asr.transcribe(spans[i], 1);
    if (nbest.hypotheses.empty()) {
      throw BackendError("cross_infer: empty ASR output for talk '" +
                         talk.talk_id + "' utterance " + std::to_string(i));
    }
    noisy_srcs.push_back(sanitize_delimiter(nbest.hypotheses.front().text));
  }
  auto translations = mt.translate(noisy_srcs);
  if (translations.size() != noisy_srcs.size()) {
    throw DataError("cross_infer: talk '" + talk.talk_id + "' produced " +
                    std::to_string(translations.size()) + " translations for " +
                    std::to_string(noisy_srcs.size()) + " utterances");
  }
  for (size_t i = 0; i < out.sentences.size(); ++i) {
    if (!out.sentences[i].ref) {
      throw DataError("cross_infer: talk '" + talk.talk_id + "' sentence " +
                      std::to_string(i) + " is missing field 'ref'");
    }
    out.sentences[i].src = noisy_srcs[i];
    out.sentences[i].mt = sanitize_delimiter(translations[i]);
  }
  return out;
}

}  // namespace

CrossInferResult cross_infer(const std::vector<Talk>& half_a,
                             const std::vector<Talk>& half_b,
                             ASRClient& asr_trained_on_a, MTClient& mt_trained_on_a,
                             ASRClient& asr_trained_on_b, MTClient& mt_trained_on_b) {
  CrossInferResult result;
  // Half A is inferred with B-trained models and vice versa.
  for (const Talk* talk : sorted_by_id(half_a)) {
    if (talk->sentences.empty()) continue;
    result.talks.push_back(infer_talk(*talk, asr_trained_on_b, mt_trained_on_b));
    result.halves[talk->talk_id] = {Half::A, Half::B};
  }
  for (const Talk* talk : sorted_by_id(half_b)) {
    if (talk->sentences.empty()) continue;
    result.talks.push_back(infer_talk(*talk, asr_trained_on_a, mt_trained_on_a));
    result.halves[talk->talk_id] = {Half::B, Half::A};
  }
  return result;
}

NoiseOracleClients make_noise_oracle_clients(
    const std::vector<Talk>& talks_to_process, double noise_rate, uint64_t seed) {
  auto asr = std::make_unique<TableAsrClient>();
  std::vector<std::vector<std::string>> mt_batches;
  for (const Talk* talk : sorted_by_id(talks_to_process)) {
    if (talk->sentences.empty()) continue;
    auto spans = utterance_spans(*talk);
    std::vector<std::string> batch;
    for (size_t i = 0; i < talk->sentences.size(); ++i) {
      const auto& sent = talk->sentences[i];
      std::string noisy_src = apply_word_noise(
          sent.src, noise_rate,
          derive_seed(seed, talk->talk_id + "#src", static_cast<uint64_t>(i)));
      asr->add(spans[i].path, spans[i].start_s, spans[i].end_s,
               {{noisy_src, 0.0}});
      if (!sent.ref) {
        throw DataError("noise oracle: talk '" + talk->talk_id + "' sentence " +
                        std::to_string(i) + " is missing field 'ref'");
      }
      batch.push_back(apply_word_noise(
          *sent.ref, noise_rate,
          derive_seed(seed, talk->talk_id + "#tgt", static_cast<uint64_t>(i))));
    }
    mt_batches.push_back(std::move(batch));
  }
  NoiseOracleClients clients;
  clients.asr = std::move(asr);
  clients.mt = std::make_unique<ScriptedMtClient>(std::move(mt_batches));
  return clients;
}

void save_sft_file(const std::vector<SftRecord>& records, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write SFT file: " + path);
  for (const auto& rec : records) {
    ordered_json j;
    j["task"] = rec.task == SftTask::asr_refine ? "asr_refine" : "doc_ape";
    j["prompt"] = rec.prompt;
    j["completion"] = rec.completion;
    ordered_json meta;
    if (rec.task == SftTask::asr_refine) {
      meta["utterance_id"] = rec.meta.talk_id;
    } else {
      meta["talk_id"] = rec.meta.talk_id;
      if (rec.meta.chunk_index) meta["chunk_index"] = *rec.meta.chunk_index;
      if (rec.meta.first_sentence) meta["first_sentence"] = *rec.meta.first_sentence;
      if (rec.meta.last_sentence) meta["last_sentence"] = *rec.meta.last_sentence;
      if (rec.meta.half) meta["half"] = half_name(*rec.meta.half);
      if (rec.meta.model_half) meta["model_half"] = half_name(*rec.meta.model_half);
    }
    j["meta"] = std::move(meta);
    out << j.dump() << "\n";
  }
}

std::vector<SftRecord> load_sft_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open SFT file: " + path);
  std::vector<SftRecord> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    const std::string where = path + ":" + std::to_string(lineno);
    json rec;
    try {
      rec = json::parse(line);
    } catch (const json::exception& e) {
      throw DataError(where + ": invalid JSON: " + e.what());
    }
    SftRecord r;
    try {
      r.task = task_from_name(rec.at("task").get<std::string>(), where);
      r.prompt = rec.at("prompt").get<std::string>();
      r.completion = rec.at("completion").get<std::string>();
      const json& meta = rec.at("meta");
      if (meta.contains("utterance_id")) {
        r.meta.talk_id = meta.at("utterance_id").get<std::string>();
      } else {
        r.meta.talk_id = meta.at("talk_id").get<std::string>();
      }
      if (meta.contains("chunk_index")) r.meta.chunk_index = meta.at("chunk_index").get<int>();
      if (meta.contains("first_sentence")) r.meta.first_sentence = meta.at("first_sentence").get<int>();
      if (meta.contains("last_sentence")) r.meta.last_sentence = meta.at("last_sentence").get<int>();
      if (meta.contains("half")) r.meta.half = half_from_name(meta.at("half").get<std::string>(), where);
      if (meta.contains("model_half")) r.meta.model_half = half_from_name(meta.at("model_half").get<std::string>(), where);
    } catch (const json::exception& e) {
      throw DataError(where + ": malformed SFT record: " + e.what());
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace cascade::synth
