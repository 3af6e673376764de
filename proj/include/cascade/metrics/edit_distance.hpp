#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace cascade::metrics {

enum class EditOpKind { match, substitute, insert, del };

// One alignment step. hyp_pos/ref_pos are the positions consumed by the op;
// insert consumes no hyp word, del consumes no ref word.
struct EditOp {
  EditOpKind kind;
  size_t hyp_pos;
  size_t ref_pos;
};

struct Alignment {
  std::vector<EditOp> ops;
  int cost = 0;  // number of non-match ops

  int substitutions() const;
  int insertions() const;
  int deletions() const;
};

// Minimal-cost word alignment with uniform costs (sub = ins = del = 1).
// Backtrace prefers match > substitute > delete > insert, so alignments are
// deterministic.
Alignment edit_distance(const std::vector<std::string>& hyp,
                        const std::vector<std::string>& ref);

// Cost-only variant with O(min(m,n)) memory, for long word streams.
int edit_cost(const std::vector<std::string>& hyp,
              const std::vector<std::string>& ref);

}  // namespace cascade::metrics
