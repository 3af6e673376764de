#pragma once

#include <string>
#include <vector>

#include "cascade/backends/clients.hpp"
#include "cascade/sentseg/rules.hpp"

namespace cascade::sentseg {

// Restores punctuation through the configured client, or passes the text
// through unchanged when none is given (refined transcripts already carry
// punctuation). The punctuator speaks the MT wire contract: one sentence in,
// one out.
std::string restore_punctuation(const std::string& text, MTClient* punctuator);

// Splits punctuated text into sentences under the given rules. Joining the
// result with single spaces reproduces the input modulo inter-sentence
// whitespace; no sentence is empty. Text without a terminator stays one
// sentence.
std::vector<std::string> split_sentences(const std::string& text,
                                         const SegmentationRules& rules);

}  // namespace cascade::sentseg
