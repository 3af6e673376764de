#include "cascade/metrics/evaluate.hpp"

#include <algorithm>
#include <fstream>
#include <map>

#include <nlohmann/json.hpp>

#include "cascade/core/errors.hpp"
#include "cascade/core/text.hpp"
#include "cascade/metrics/bleu.hpp"
#include "cascade/metrics/chrf.hpp"
#include "cascade/metrics/resegment.hpp"

namespace cascade::metrics {

namespace {

std::string hyp_target(const SentenceRecord& rec, const std::string& talk_id) {
  if (rec.ape) return *rec.ape;
  if (rec.mt) return *rec.mt;
  throw DataError("talk '" + talk_id + "' sentence " + std::to_string(rec.index) +
                  " has neither 'ape' nor 'mt'; nothing to evaluate");
}

std::string join_srcs(const Talk& talk) {
  std::vector<std::string> srcs;
  srcs.reserve(talk.sentences.size());
  for (const auto& s : talk.sentences) srcs.push_back(s.src);
  return join_tokens(srcs);
}

}  // namespace

EvalReport evaluate(const std::vector<Talk>& hyp_talks,
                    const std::vector<Talk>& ref_talks,
                    const EvalOptions& options, ScorerClient* scorer) {
  std::map<std::string, const Talk*> refs_by_id;
  for (const auto& talk : ref_talks) refs_by_id[talk.talk_id] = &talk;
  if (hyp_talks.size() != ref_talks.size()) {
    throw DataError("evaluate: hypothesis corpus has " +
                    std::to_string(hyp_talks.size()) + " talks, references have " +
                    std::to_string(ref_talks.size()));
  }

  EvalReport report;
  report.resegment_enabled = options.resegment;
  report.wer_norm = options.wer_norm;

  WerAccumulator wer_acc;
  std::vector<std::string> aligned_hyps;
  std::vector<std::string> aligned_refs;
  std::vector<std::string> aligned_srcs;

  std::vector<const Talk*> sorted_hyps;
  for (const auto& talk : hyp_talks) sorted_hyps.push_back(&talk);
  std::sort(sorted_hyps.begin(), sorted_hyps.end(),
            [](const Talk* a, const Talk* b) { return a->talk_id < b->talk_id; });

  for (const Talk* hyp : sorted_hyps) {
    auto it = refs_by_id.find(hyp->talk_id);
    if (it == refs_by_id.end()) {
      throw DataError("evaluate: hypothesis talk '" + hyp->talk_id +
                      "' has no reference talk");
    }
    const Talk& ref = *it->second;
    ++report.talks;
    report.hyp_sentences += static_cast<int>(hyp->sentences.size());
    report.ref_sentences += static_cast<int>(ref.sentences.size());

    // ASR quality: concatenated transcript against the gold transcript.
    wer_acc.add(join_srcs(*hyp), join_srcs(ref), options.wer_norm);

    std::vector<std::string> ref_targets;
    for (const auto& rec : ref.sentences) {
      if (!rec.ref) {
        throw DataError("evaluate: reference talk '" + ref.talk_id + "' sentence " +
                        std::to_string(rec.index) + " is missing field 'ref'");
      }
      ref_targets.push_back(*rec.ref);
    }
    std::vector<std::string> hyp_targets;
    for (const auto& rec : hyp->sentences) {
      hyp_targets.push_back(hyp_target(rec, hyp->talk_id));
    }

    if (hyp_targets.size() != ref_targets.size()) {
      if (!options.resegment) {
        throw DataError("evaluate: talk '" + hyp->talk_id + "' has " +
                        std::to_string(hyp_targets.size()) + " hypothesis vs " +
                        std::to_string(ref_targets.size()) +
                        " reference sentences; pass resegment to realign");
      }
      std::vector<std::string> hyp_words = split_whitespace(join_tokens(hyp_targets));
      std::vector<std::vector<std::string>> ref_segments;
      for (const auto& r : ref_targets) ref_segments.push_back(split_whitespace(r));
      ResegmentResult reseg = mwer_resegment(hyp_words, ref_segments);
      hyp_targets.clear();
      for (const auto& piece : reseg.pieces) hyp_targets.push_back(join_tokens(piece));
      ++report.resegmented_talks;
    }

    for (size_t i = 0; i < ref_targets.size(); ++i) {
      aligned_hyps.push_back(hyp_targets[i]);
      aligned_refs.push_back(ref_targets[i]);
      aligned_srcs.push_back(ref.sentences[i].src);
    }
  }

  report.wer = wer_acc.percent();
  report.bleu = bleu(aligned_hyps, aligned_refs);
  report.chrf2 = chrf2(aligned_hyps, aligned_refs);
  if (scorer) {
    report.comet = scorer->score(aligned_srcs, aligned_hyps, aligned_refs);
  }
  return report;
}

nlohmann::ordered_json report_to_json(const EvalReport& report) {
  nlohmann::ordered_json j;
  j["wer"] = report.wer;
  j["bleu"] = report.bleu;
  j["chrf2"] = report.chrf2;
  if (report.comet) j["comet"] = *report.comet;
  j["talks"] = report.talks;
  j["hyp_sentences"] = report.hyp_sentences;
  j["ref_sentences"] = report.ref_sentences;
  j["resegmented_talks"] = report.resegmented_talks;
  j["resegment_enabled"] = report.resegment_enabled;
  j["wer_lowercase"] = report.wer_norm.lowercase;
  j["wer_strip_punct"] = report.wer_norm.strip_punct;
  return j;
}

void save_report(const EvalReport& report, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write report: " + path);
  out << report_to_json(report).dump(2) << "\n";
}

}  // namespace cascade::metrics
