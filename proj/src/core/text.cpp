#include "cascade/core/text.hpp"

#include <cctype>

namespace cascade {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

// Non-ASCII bytes count as word characters so UTF-8 sequences stay attached
// to the token they belong to.
bool is_word_char(char c) {
  unsigned char u = static_cast<unsigned char>(c);
  return u >= 0x80 || std::isalnum(u) != 0;
}

}  // namespace

std::vector<std::string> split_whitespace(std::string_view text) {
  std::vector<std::string> out;
  size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_space(text[i])) ++i;
    size_t start = i;
    while (i < text.size() && !is_space(text[i])) ++i;
    if (i > start) out.emplace_back(text.substr(start, i - start));
  }
  return out;
}

std::string join_tokens(const std::vector<std::string>& tokens,
                        std::string_view sep) {
  std::string out;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) out += sep;
    out += tokens[i];
  }
  return out;
}

std::string to_lower_ascii(std::string_view text) {
  std::string out(text);
  for (char& c : out) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

std::string trim(std::string_view text) {
  size_t begin = 0;
  size_t end = text.size();
  while (begin < end && is_space(text[begin])) ++begin;
  while (end > begin && is_space(text[end - 1])) --end;
  return std::string(text.substr(begin, end - begin));
}

std::string collapse_spaces(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool in_space = true;  // swallow leading whitespace
  for (char c : text) {
    if (is_space(c)) {
      if (!in_space) out += ' ';
      in_space = true;
    } else {
      out += c;
      in_space = false;
    }
  }
  if (!out.empty() && out.back() == ' ') out.pop_back();
  return out;
}

int count_tokens_default(std::string_view text) {
  int count = 0;
  size_t i = 0;
  while (i < text.size()) {
    if (is_space(text[i])) {
      ++i;
    } else if (is_word_char(text[i])) {
      ++count;
      while (i < text.size() && is_word_char(text[i])) ++i;
    } else {
      ++count;  // single punctuation character
      ++i;
    }
  }
  return count;
}

bool contains_delimiter(std::string_view text) {
  return text.find(kDelimiter) != std::string_view::npos;
}

std::string sanitize_delimiter(std::string_view text) {
  std::string out(text);
  size_t pos = 0;
  while ((pos = out.find(kDelimiter, pos)) != std::string::npos) {
    out.replace(pos, kDelimiter.size(), " ");
  }
  return collapse_spaces(out);
}

std::vector<std::string> split_on_delimiter(std::string_view text) {
  std::vector<std::string> out;
  size_t start = 0;
  while (true) {
    size_t pos = text.find(kDelimiter, start);
    if (pos == std::string_view::npos) {
      out.push_back(trim(text.substr(start)));
      break;
    }
    out.push_back(trim(text.substr(start, pos - start)));
    start = pos + kDelimiter.size();
  }
  return out;
}

std::string strip_through_last_marker(std::string_view text,
                                      std::string_view marker) {
  size_t pos = text.rfind(marker);
  if (pos == std::string_view::npos) return std::string(text);
  return std::string(text.substr(pos + marker.size()));
}

}  // namespace cascade
