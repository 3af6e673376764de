#pragma once

#include <string>
#include <vector>

namespace cascade::metrics {

struct WerNorm {
  bool lowercase = true;
  bool strip_punct = true;
};

// Applies the WER text normalization and splits into words.
std::vector<std::string> normalize_words(const std::string& text, const WerNorm& norm);

// 100 * word edit cost / reference word count. Throws DataError when the
// reference is empty after normalization.
double wer(const std::string& hyp, const std::string& ref, const WerNorm& norm = {});

// Corpus accumulator: total errors over total reference words.
struct WerAccumulator {
  long long errors = 0;
  long long ref_words = 0;

  void add(const std::string& hyp, const std::string& ref, const WerNorm& norm = {});
  double percent() const;
};

}  // namespace cascade::metrics
