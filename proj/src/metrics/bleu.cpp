#include "cascade/metrics/bleu.hpp"

#include <cmath>
#include <regex>
#include <unordered_map>

#include "cascade/core/errors.hpp"
#include "cascade/core/text.hpp"

namespace cascade::metrics {

namespace {

constexpr int kMaxOrder = 4;

// Character class of mteval-v13a's punctuation-splitting rule. Period,
// comma and dash are excluded here and handled by the digit-context rules.
bool is_13a_punct(char c) {
  return (c >= '{' && c <= '~') || (c >= '[' && c <= '`') ||
         (c >= ' ' && c <= '&') || (c >= '(' && c <= '+') ||
         (c >= ':' && c <= '@') || c == '/';
}

std::string replace_all(std::string s, const std::string& from, const std::string& to) {
  size_t pos = 0;
  while ((pos = s.find(from, pos)) != std::string::npos) {
    s.replace(pos, from.size(), to);
    pos += to.size();
  }
  return s;
}

// n-gram multiset as joined keys; '\x1f' never occurs in tokens.
std::unordered_map<std::string, int> ngram_counts(
    const std::vector<std::string>& tokens, int n) {
  std::unordered_map<std::string, int> counts;
  if (static_cast<int>(tokens.size()) < n) return counts;
  for (size_t i = 0; i + n <= tokens.size(); ++i) {
    std::string key = tokens[i];
    for (int k = 1; k < n; ++k) {
      key += '\x1f';
      key += tokens[i + k];
    }
    ++counts[key];
  }
  return counts;
}

}  // namespace

std::vector<std::string> tokenize_13a(const std::string& text) {
  std::string s = replace_all(text, "<skipped>", "");
  s = replace_all(s, "-\n", "");
  s = replace_all(s, "\n", " ");
  s = replace_all(s, "&quot;", "\"");
  s = replace_all(s, "&amp;", "&");
  s = replace_all(s, "&lt;", "<");
  s = replace_all(s, "&gt;", ">");
  s = " " + s + " ";

  std::string split;
  split.reserve(s.size() * 2);
  for (char c : s) {
    if (is_13a_punct(c)) {
      split += ' ';
      split += c;
      split += ' ';
    } else {
      split += c;
    }
  }

  static const std::regex dot_after(R"(([^0-9])([\.,]))");
  static const std::regex dot_before(R"(([\.,])([^0-9]))");
  static const std::regex digit_dash(R"(([0-9])(-))");
  split = std::regex_replace(split, dot_after, "$1 $2 ");
  split = std::regex_replace(split, dot_before, " $1 $2");
  split = std::regex_replace(split, digit_dash, "$1 - ");

  return split_whitespace(split);
}

double bleu(const std::vector<std::string>& hyps,
            const std::vector<std::string>& refs, const BleuOptions& options) {
  if (hyps.size() != refs.size()) {
    throw DataError("BLEU requires equal hypothesis and reference counts, got " +
                    std::to_string(hyps.size()) + " vs " + std::to_string(refs.size()));
  }
  if (refs.empty()) throw DataError("BLEU requires a non-empty corpus");

  long long match[kMaxOrder] = {0};
  long long total[kMaxOrder] = {0};
  long long hyp_len = 0;
  long long ref_len = 0;
  for (size_t i = 0; i < hyps.size(); ++i) {
    auto h = tokenize_13a(hyps[i]);
    auto r = tokenize_13a(refs[i]);
    hyp_len += static_cast<long long>(h.size());
    ref_len += static_cast<long long>(r.size());
    for (int n = 1; n <= kMaxOrder; ++n) {
      auto hc = ngram_counts(h, n);
      auto rc = ngram_counts(r, n);
      for (const auto& [gram, count] : hc) {
        auto it = rc.find(gram);
        if (it != rc.end()) match[n - 1] += std::min(count, it->second);
      }
      long long grams = static_cast<long long>(h.size()) - n + 1;
      if (grams > 0) total[n - 1] += grams;
    }
  }

  if (hyp_len == 0) return 0.0;
  double smooth = 1.0;
  double log_sum = 0.0;
  int effective_order = 0;
  for (int n = 1; n <= kMaxOrder; ++n) {
    if (total[n - 1] == 0) break;
    effective_order = n;
    double p;
    if (match[n - 1] == 0) {
      if (!options.smooth) return 0.0;
      smooth *= 2.0;
      p = 1.0 / (smooth * static_cast<double>(total[n - 1]));
    } else {
      p = static_cast<double>(match[n - 1]) / static_cast<double>(total[n - 1]);
    }
    log_sum += std::log(p);
  }
  if (effective_order == 0) return 0.0;

  double bp = hyp_len >= ref_len
                  ? 1.0
                  : std::exp(1.0 - static_cast<double>(ref_len) /
                                       static_cast<double>(hyp_len));
  return 100.0 * bp * std::exp(log_sum / effective_order);
}

}  // namespace cascade::metrics
