#pragma once

#include <string>
#include <vector>

namespace cascade::metrics {

// WMT 13a-style tokenization: HTML-entity unescaping, punctuation split off,
// period/comma kept attached to digits, digit-dash split.
std::vector<std::string> tokenize_13a(const std::string& text);

struct BleuOptions {
  bool smooth = true;  // exponential smoothing of zero n-gram counts
};

// Corpus BLEU, n-gram orders 1-4, geometric mean over the effective orders
// (orders with at least one hypothesis n-gram), brevity penalty
// exp(1 - r/c) when c < r. With smoothing on, a zero match count at order n
// contributes p_n = 1 / (2^z * total_n) where z counts the zero orders so
// far; with smoothing off a zero count yields a zero score.
double bleu(const std::vector<std::string>& hyps,
            const std::vector<std::string>& refs,
            const BleuOptions& options = {});

}  // namespace cascade::metrics
