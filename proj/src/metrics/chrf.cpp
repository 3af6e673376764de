#include "cascade/metrics/chrf.hpp"

#include <cctype>
#include <unordered_map>

#include "cascade/core/errors.hpp"

namespace cascade::metrics {

namespace {

constexpr int kMaxOrder = 6;
constexpr double kBeta2 = 4.0;  // beta = 2, recall weighted twice precision

std::string strip_whitespace(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  }
  return out;
}

}  // namespace

double chrf2(const std::vector<std::string>& hyps,
             const std::vector<std::string>& refs) {
  if (hyps.size() != refs.size()) {
    throw DataError("chrF requires equal hypothesis and reference counts, got " +
                    std::to_string(hyps.size()) + " vs " + std::to_string(refs.size()));
  }
  if (refs.empty()) throw DataError("chrF requires a non-empty corpus");

  long long match[kMaxOrder] = {0};
  long long hyp_total[kMaxOrder] = {0};
  long long ref_total[kMaxOrder] = {0};
  for (size_t i = 0; i < hyps.size(); ++i) {
    std::string h = strip_whitespace(hyps[i]);
    std::string r = strip_whitespace(refs[i]);
    for (int n = 1; n <= kMaxOrder; ++n) {
      std::unordered_map<std::string, int> rc;
      if (static_cast<int>(r.size()) >= n) {
        for (size_t p = 0; p + n <= r.size(); ++p) ++rc[r.substr(p, n)];
        ref_total[n - 1] += static_cast<long long>(r.size()) - n + 1;
      }
      if (static_cast<int>(h.size()) >= n) {
        std::unordered_map<std::string, int> hc;
        for (size_t p = 0; p + n <= h.size(); ++p) ++hc[h.substr(p, n)];
        hyp_total[n - 1] += static_cast<long long>(h.size()) - n + 1;
        for (const auto& [gram, count] : hc) {
          auto it = rc.find(gram);
          if (it != rc.end()) match[n - 1] += std::min(count, it->second);
        }
      }
    }
  }

  double f_sum = 0.0;
  int effective_orders = 0;
  for (int n = 0; n < kMaxOrder; ++n) {
    if (hyp_total[n] == 0 && ref_total[n] == 0) continue;
    ++effective_orders;
    double prec = hyp_total[n] > 0
                      ? static_cast<double>(match[n]) / static_cast<double>(hyp_total[n])
                      : 0.0;
    double rec = ref_total[n] > 0
                     ? static_cast<double>(match[n]) / static_cast<double>(ref_total[n])
                     : 0.0;
    double denom = kBeta2 * prec + rec;
    if (denom > 0.0) f_sum += (1.0 + kBeta2) * prec * rec / denom;
  }
  if (effective_orders == 0) return 0.0;
  return 100.0 * f_sum / effective_orders;
}

}  // namespace cascade::metrics
