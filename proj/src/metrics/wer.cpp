#include "cascade/metrics/wer.hpp"

#include <cctype>

#include "cascade/core/errors.hpp"
#include "cascade/core/text.hpp"
#include "cascade/metrics/edit_distance.hpp"

namespace cascade::metrics {

std::vector<std::string> normalize_words(const std::string& text, const WerNorm& norm) {
  std::string cleaned;
  cleaned.reserve(text.size());
  for (char c : text) {
    unsigned char u = static_cast<unsigned char>(c);
    if (norm.strip_punct && u < 0x80 && std::ispunct(u)) continue;
    if (norm.lowercase && u < 0x80) {
      cleaned += static_cast<char>(std::tolower(u));
    } else {
      cleaned += c;
    }
  }
  return split_whitespace(cleaned);
}

double wer(const std::string& hyp, const std::string& ref, const WerNorm& norm) {
  WerAccumulator acc;
  acc.add(hyp, ref, norm);
  return acc.percent();
}

void WerAccumulator::add(const std::string& hyp, const std::string& ref,
                         const WerNorm& norm) {
  auto ref_tokens = normalize_words(ref, norm);
  if (ref_tokens.empty()) {
    throw DataError("WER reference is empty after normalization");
  }
  auto hyp_tokens = normalize_words(hyp, norm);
  errors += edit_cost(hyp_tokens, ref_tokens);
  ref_words += static_cast<long long>(ref_tokens.size());
}

double WerAccumulator::percent() const {
  if (ref_words == 0) throw DataError("WER computed over zero reference words");
  return 100.0 * static_cast<double>(errors) / static_cast<double>(ref_words);
}

}  // namespace cascade::metrics
