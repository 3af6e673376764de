#include "cascade/refine/refine.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

#include "cascade/core/errors.hpp"
#include "cascade/core/text.hpp"
#include "cascade/refine/degeneracy.hpp"
#include "cascade/refine/prompt.hpp"
#include "cascade/util/parallel.hpp"

using nlohmann::json;
using nlohmann::ordered_json;

namespace cascade::refine {

RefinementResult refine_transcript(const NBestList& nbest, LLMClient& llm,
                                   const PipelineConfig& cfg) {
  validate_nbest(nbest, "refine_transcript input");
  RefinementResult result;
  result.utterance_id = nbest.utterance_id;

  const std::string prompt = build_asr_prompt(nbest, cfg.nbest_k);
  std::string output = llm.complete(prompt);
  output = trim(strip_through_last_marker(output, kAnswerMarker));

  int longest_candidate = 0;
  const size_t used = std::min<size_t>(static_cast<size_t>(cfg.nbest_k),
                                       nbest.hypotheses.size());
  for (size_t i = 0; i < used; ++i) {
    longest_candidate = std::max<int>(
        longest_candidate,
        static_cast<int>(split_whitespace(nbest.hypotheses[i].text).size()));
  }

  const DegeneracyGuard guard{cfg.degeneracy_factor, cfg.repeat_window,
                              cfg.repeat_min_count};
  std::optional<std::string> reason;
  if (output.empty()) {
    reason = "empty";
  } else {
    reason = guard.check(output, longest_candidate);
  }

  if (reason) {
    result.refined = nbest.hypotheses.front().text;
    result.used_fallback = true;
    result.reason = reason;
  } else {
    result.refined = output;
  }
  return result;
}

BatchSummary batch_refine(const std::vector<NBestList>& corpus, LLMClient& llm,
                          const PipelineConfig& cfg) {
  BatchSummary summary;
  summary.items = parallel_map<BatchItem>(
      corpus.size(),
      [&](size_t i) {
        BatchItem item;
        try {
          item.result = refine_transcript(corpus[i], llm, cfg);
          item.status = item.result.used_fallback ? UtteranceStatus::fallback
                                                  : UtteranceStatus::refined;
        } catch (const BackendError& e) {
          item.status = UtteranceStatus::failed;
          item.error = e.what();
          item.result.utterance_id = corpus[i].utterance_id;
        }
        return item;
      },
      cfg.parallelism);
  for (const auto& item : summary.items) {
    switch (item.status) {
      case UtteranceStatus::refined: ++summary.refined; break;
      case UtteranceStatus::fallback: ++summary.fallbacks; break;
      case UtteranceStatus::failed: ++summary.failed; break;
    }
  }
  return summary;
}

void save_refined_file(const std::vector<RefinementResult>& results,
                       const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write refined file: " + path);
  for (const auto& r : results) {
    ordered_json rec;
    rec["utterance_id"] = r.utterance_id;
    rec["refined"] = r.refined;
    rec["used_fallback"] = r.used_fallback;
    if (r.reason) rec["reason"] = *r.reason;
    out << rec.dump() << "\n";
  }
}

std::vector<RefinementResult> load_refined_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open refined file: " + path);
  std::vector<RefinementResult> out;
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
    RefinementResult r;
    try {
      r.utterance_id = rec.at("utterance_id").get<std::string>();
      r.refined = rec.at("refined").get<std::string>();
      r.used_fallback = rec.at("used_fallback").get<bool>();
      if (rec.contains("reason")) r.reason = rec.at("reason").get<std::string>();
    } catch (const json::exception& e) {
      throw DataError(where + ": malformed refined record: " + e.what());
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace cascade::refine
