#pragma once

#include <set>
#include <string>

namespace cascade::sentseg {

// Hand-crafted segmentation rules: split after a terminator followed by
// whitespace and an uppercase letter or digit, unless the terminator ends a
// protected abbreviation.
struct SegmentationRules {
  std::set<char> terminators = {'.', '!', '?'};
  std::set<std::string> abbreviations;
  int min_sentence_tokens = 1;
};

SegmentationRules default_rules();

// Validates terminators non-empty, every abbreviation ending with a
// terminator, min_sentence_tokens >= 1. Throws DataError.
void validate_rules(const SegmentationRules& rules);

// Extends the defaults with a plain-text file, one abbreviation per line.
SegmentationRules load_rules_file(const std::string& path);

}  // namespace cascade::sentseg
