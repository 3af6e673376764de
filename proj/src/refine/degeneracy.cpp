#include "cascade/refine/degeneracy.hpp"

#include "cascade/core/text.hpp"

namespace cascade::refine {

bool has_consecutive_repeat(const std::vector<std::string>& tokens,
                            int window, int min_count) {
  if (window < 1 || min_count < 2) return false;
  const size_t w = static_cast<size_t>(window);
  const size_t need = w * static_cast<size_t>(min_count);
  if (tokens.size() < need) return false;
  for (size_t start = 0; start + need <= tokens.size(); ++start) {
    bool all_equal = true;
    for (size_t k = 0; all_equal && k < w; ++k) {
      const std::string& first = tokens[start + k];
      for (int rep = 1; rep < min_count; ++rep) {
        if (tokens[start + rep * w + k] != first) {
          all_equal = false;
          break;
        }
      }
    }
    if (all_equal) return true;
  }
  return false;
}

std::optional<std::string> DegeneracyGuard::check(const std::string& output,
                                                  int reference_tokens) const {
  auto tokens = split_whitespace(output);
  if (reference_tokens > 0 &&
      static_cast<double>(tokens.size()) > factor * reference_tokens) {
    return "length";
  }
  if (has_consecutive_repeat(tokens, repeat_window, repeat_min_count)) {
    return "repetition";
  }
  return std::nullopt;
}

}  // namespace cascade::refine
