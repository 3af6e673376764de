#include "cascade/metrics/edit_distance.hpp"

#include <algorithm>

namespace cascade::metrics {

namespace {

int count_kind(const Alignment& a, EditOpKind kind) {
  int n = 0;
  for (const auto& op : a.ops) {
    if (op.kind == kind) ++n;
  }
  return n;
}

}  // namespace

int Alignment::substitutions() const { return count_kind(*this, EditOpKind::substitute); }
int Alignment::insertions() const { return count_kind(*this, EditOpKind::insert); }
int Alignment::deletions() const { return count_kind(*this, EditOpKind::del); }

Alignment edit_distance(const std::vector<std::string>& hyp,
                        const std::vector<std::string>& ref) {
  const size_t m = hyp.size();
  const size_t n = ref.size();
  std::vector<std::vector<int>> dist(m + 1, std::vector<int>(n + 1, 0));
  for (size_t i = 1; i <= m; ++i) dist[i][0] = static_cast<int>(i);
  for (size_t j = 1; j <= n; ++j) dist[0][j] = static_cast<int>(j);
  for (size_t i = 1; i <= m; ++i) {
    for (size_t j = 1; j <= n; ++j) {
      int diag = dist[i - 1][j - 1] + (hyp[i - 1] == ref[j - 1] ? 0 : 1);
      int del = dist[i - 1][j] + 1;
      int ins = dist[i][j - 1] + 1;
      dist[i][j] = std::min({diag, del, ins});
    }
  }

  Alignment out;
  out.cost = dist[m][n];
  size_t i = m;
  size_t j = n;
  std::vector<EditOp> rev;
  while (i > 0 || j > 0) {
    if (i > 0 && j > 0) {
      bool eq = hyp[i - 1] == ref[j - 1];
      int diag = dist[i - 1][j - 1] + (eq ? 0 : 1);
      if (diag == dist[i][j]) {
        rev.push_back({eq ? EditOpKind::match : EditOpKind::substitute, i - 1, j - 1});
        --i;
        --j;
        continue;
      }
    }
    if (i > 0 && dist[i - 1][j] + 1 == dist[i][j]) {
      rev.push_back({EditOpKind::del, i - 1, j});
      --i;
      continue;
    }
    rev.push_back({EditOpKind::insert, i, j - 1});
    --j;
  }
  out.ops.assign(rev.rbegin(), rev.rend());
  return out;
}

int edit_cost(const std::vector<std::string>& hyp,
              const std::vector<std::string>& ref) {
  const std::vector<std::string>& longer = hyp.size() >= ref.size() ? hyp : ref;
  const std::vector<std::string>& shorter = hyp.size() >= ref.size() ? ref : hyp;
  const size_t m = longer.size();
  const size_t n = shorter.size();
  std::vector<int> row(n + 1);
  for (size_t j = 0; j <= n; ++j) row[j] = static_cast<int>(j);
  for (size_t i = 1; i <= m; ++i) {
    int prev_diag = row[0];
    row[0] = static_cast<int>(i);
    for (size_t j = 1; j <= n; ++j) {
      int diag = prev_diag + (longer[i - 1] == shorter[j - 1] ? 0 : 1);
      prev_diag = row[j];
      row[j] = std::min({diag, row[j - 1] + 1, row[j] + 1});
    }
  }
  return row[n];
}

}  // namespace cascade::metrics
