#pragma once

#include <string>
#include <vector>

#include "cascade/core/types.hpp"

namespace cascade {

// Reads a corpus manifest (one JSONL file, or every *.jsonl in a directory).
// Line shapes: talk records {talk_id, audio?, duration_s?, src_lang,
// tgt_lang}, segment records {talk_id, start_s, end_s, text?}, sentence
// records {talk_id, index, src, mt?, ape?, ref?}. Returns talks sorted by
// talk_id with all type invariants checked; errors name file, line and field.
std::vector<Talk> load_corpus(const std::string& path);

// Canonical form: talks sorted by talk_id; per talk the talk record, then
// its segments, then its sentences by index. Loading a canonical file and
// saving it again is byte-identical.
void save_corpus(const std::vector<Talk>& talks, const std::string& path);
std::string corpus_to_jsonl(const std::vector<Talk>& talks);

// N-best JSONL: {utterance_id, hypotheses: [{text, score}], ref?}.
std::vector<RefNBest> load_nbest_file(const std::string& path);
void save_nbest_file(const std::vector<RefNBest>& lists, const std::string& path);

}  // namespace cascade
