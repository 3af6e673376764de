#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "cascade/backends/clients.hpp"
#include "cascade/core/types.hpp"
#include "cascade/metrics/wer.hpp"

namespace cascade::metrics {

struct EvalOptions {
  // When hypothesis and reference sentence counts differ for a talk, cut the
  // hypothesis stream to the reference segmentation. Without this flag a
  // count mismatch is an error, never silent scoring.
  bool resegment = false;
  WerNorm wer_norm;
};

struct EvalReport {
  double wer = 0.0;    // transcript vs gold transcript, normalized words
  double bleu = 0.0;   // target side, case-sensitive detokenized text
  double chrf2 = 0.0;
  std::optional<double> comet;  // external scorer, when configured
  int talks = 0;
  int hyp_sentences = 0;
  int ref_sentences = 0;
  int resegmented_talks = 0;
  bool resegment_enabled = false;
  WerNorm wer_norm;
};

// Scores hypothesis talks against reference talks matched 1:1 by talk_id.
// The hypothesis target side is ape when present, mt otherwise; references
// carry gold transcripts in src and gold translations in ref.
EvalReport evaluate(const std::vector<Talk>& hyp_talks,
                    const std::vector<Talk>& ref_talks,
                    const EvalOptions& options, ScorerClient* scorer = nullptr);

nlohmann::ordered_json report_to_json(const EvalReport& report);
void save_report(const EvalReport& report, const std::string& path);

}  // namespace cascade::metrics
