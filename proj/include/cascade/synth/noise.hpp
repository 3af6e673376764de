#pragma once

#include <cstdint>
#include <string>

namespace cascade::synth {

// Substitutes each whitespace token independently with probability `rate`,
// preserving token count and hence sentence alignment. Substituted tokens
// always differ from the original. Deterministic in the seed.
std::string apply_word_noise(const std::string& text, double rate, uint64_t seed);

// Fraction of whitespace-token positions where the two texts differ.
// Requires equal token counts.
double substitution_rate(const std::string& original, const std::string& noised);

}  // namespace cascade::synth
