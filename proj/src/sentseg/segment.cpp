#include "cascade/sentseg/segment.hpp"

#include <cctype>

#include "cascade/core/errors.hpp"
#include "cascade/core/text.hpp"

namespace cascade::sentseg {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

bool starts_sentence(char c) {
  unsigned char u = static_cast<unsigned char>(c);
  return std::isupper(u) != 0 || std::isdigit(u) != 0;
}

// The token may carry leading punctuation ("(e.g.") and still be protected.
bool is_protected(const std::string& token, const SegmentationRules& rules) {
  for (const auto& abbr : rules.abbreviations) {
    if (token.size() < abbr.size()) continue;
    if (token.compare(token.size() - abbr.size(), abbr.size(), abbr) != 0) continue;
    if (token.size() == abbr.size()) return true;
    unsigned char before = static_cast<unsigned char>(
        token[token.size() - abbr.size() - 1]);
    if (!std::isalnum(before)) return true;
  }
  return false;
}

}  // namespace

std::string restore_punctuation(const std::string& text, MTClient* punctuator) {
  if (trim(text).empty()) {
    throw DataError("restore_punctuation: input text is empty");
  }
  if (punctuator == nullptr) return text;
  auto out = punctuator->translate({text});
  if (out.size() != 1) {
    throw BackendError("punctuator returned " + std::to_string(out.size()) +
                       " outputs for one input");
  }
  return out.front();
}

std::vector<std::string> split_sentences(const std::string& text,
                                         const SegmentationRules& rules) {
  validate_rules(rules);
  std::vector<std::string> out;
  const size_t n = text.size();
  size_t start = 0;

  for (size_t i = 0; i < n; ++i) {
    if (!rules.terminators.count(text[i])) continue;
    size_t k = i + 1;
    if (k >= n || !is_space(text[k])) continue;
    while (k < n && is_space(text[k])) ++k;
    if (k >= n || !starts_sentence(text[k])) continue;

    size_t token_start = i;
    while (token_start > start && !is_space(text[token_start - 1])) --token_start;
    if (is_protected(text.substr(token_start, i - token_start + 1), rules)) continue;

    std::string sentence = trim(text.substr(start, i + 1 - start));
    if (sentence.empty()) continue;
    if (static_cast<int>(split_whitespace(sentence).size()) < rules.min_sentence_tokens) {
      continue;
    }
    out.push_back(std::move(sentence));
    start = k;
  }

  std::string rest = trim(text.substr(start));
  if (!rest.empty()) out.push_back(std::move(rest));
  return out;
}

}  // namespace cascade::sentseg
