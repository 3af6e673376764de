#pragma once

#include <string>
#include <vector>

namespace cascade::metrics {

// chrF with beta = 2: byte n-grams up to order 6 over whitespace-stripped
// text, corpus-accumulated counts, per-order F2 averaged over effective
// orders (orders where hypothesis or reference produced any n-gram).
double chrf2(const std::vector<std::string>& hyps,
             const std::vector<std::string>& refs);

}  // namespace cascade::metrics
