#include "cascade/synth/noise.hpp"

#include <random>

#include "cascade/core/errors.hpp"
#include "cascade/core/text.hpp"

namespace cascade::synth {

namespace {

// Filler-style corruption vocabulary; close enough to ASR confusions for a
// data-shape oracle.
const char* kNoiseWords[] = {"um", "uh", "ah", "er", "eh", "oh", "hm", "mm"};

}  // namespace

std::string apply_word_noise(const std::string& text, double rate, uint64_t seed) {
  if (rate < 0.0 || rate > 1.0) {
    throw DataError("apply_word_noise: rate must be in [0, 1]");
  }
  auto tokens = split_whitespace(text);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<size_t> pick(0, std::size(kNoiseWords) - 1);
  for (auto& token : tokens) {
    if (coin(rng) >= rate) continue;
    std::string replacement = kNoiseWords[pick(rng)];
    if (replacement == token) replacement += "m";
    token = std::move(replacement);
  }
  return join_tokens(tokens);
}

double substitution_rate(const std::string& original, const std::string& noised) {
  auto a = split_whitespace(original);
  auto b = split_whitespace(noised);
  if (a.size() != b.size()) {
    throw DataError("substitution_rate: token counts differ");
  }
  if (a.empty()) return 0.0;
  size_t diff = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) ++diff;
  }
  return static_cast<double>(diff) / static_cast<double>(a.size());
}

}  // namespace cascade::synth
