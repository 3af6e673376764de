#include "cascade/sentseg/rules.hpp"

#include <fstream>

#include "cascade/core/errors.hpp"
#include "cascade/core/text.hpp"

namespace cascade::sentseg {

SegmentationRules default_rules() {
  SegmentationRules rules;
  rules.abbreviations = {
      "Mr.",  "Mrs.", "Ms.",  "Dr.",   "Prof.", "St.",  "Jr.",  "Sr.",
      "e.g.", "i.e.", "etc.", "vs.",   "cf.",   "No.",  "Nos.", "Fig.",
      "U.S.", "U.K.", "U.N.", "Inc.",  "Ltd.",  "Co.",  "approx.",
  };
  return rules;
}

void validate_rules(const SegmentationRules& rules) {
  if (rules.terminators.empty()) {
    throw DataError("segmentation rules: terminator set must be non-empty");
  }
  if (rules.min_sentence_tokens < 1) {
    throw DataError("segmentation rules: min_sentence_tokens must be >= 1");
  }
  for (const auto& abbr : rules.abbreviations) {
    if (abbr.empty() || !rules.terminators.count(abbr.back())) {
      throw DataError("segmentation rules: abbreviation '" + abbr +
                      "' must end with a terminator character");
    }
  }
}

SegmentationRules load_rules_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open rules file: " + path);
  SegmentationRules rules = default_rules();
  std::string line;
  while (std::getline(in, line)) {
    std::string abbr = trim(line);
    if (abbr.empty() || abbr[0] == '#') continue;
    rules.abbreviations.insert(abbr);
  }
  validate_rules(rules);
  return rules;
}

}  // namespace cascade::sentseg
