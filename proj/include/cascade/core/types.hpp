#pragma once

#include <optional>
#include <string>
#include <vector>

namespace cascade {

// Speech segment inside a talk, in seconds from the start of the recording.
struct Segment {
  double start_s = 0.0;
  double end_s = 0.0;
  std::optional<std::string> text;
};

// One aligned sentence: source transcript, MT hypothesis, optional
// document-level post-edit and optional reference translation.
struct SentenceRecord {
  int index = 0;
  std::string src;
  std::optional<std::string> mt;
  std::optional<std::string> ape;
  std::optional<std::string> ref;
};

struct AudioRef {
  std::string path;
  std::optional<double> duration_s;
};

// One recording/document unit. Immutable after construction; safe to share
// between workers.
struct Talk {
  std::string talk_id;
  std::optional<AudioRef> audio;
  std::string src_lang;
  std::string tgt_lang;
  std::vector<Segment> segments;
  std::vector<SentenceRecord> sentences;
};

struct Hypothesis {
  std::string text;
  double score = 0.0;  // log-probability-like; higher is better
};

// Ranked beam-search candidates for one utterance. List order is rank order
// and is never permuted.
struct NBestList {
  std::string utterance_id;
  std::vector<Hypothesis> hypotheses;
};

// N-best list with the gold transcript attached, used for SFT generation.
struct RefNBest {
  NBestList nbest;
  std::optional<std::string> ref;
};

// Contiguous run of sentences fitting the source-side token budget; the unit
// of document post-editing. `oversized` marks a single sentence that exceeds
// the budget on its own.
struct DocChunk {
  std::string talk_id;
  int chunk_index = 0;
  int first_sentence = 0;
  int last_sentence = 0;
  std::vector<SentenceRecord> records;
  bool oversized = false;
};

// Throwing validators; `where` prefixes the error message with the data
// source (file:line or a caller-supplied context).
void validate_segment(const Segment& seg, std::optional<double> talk_duration,
                      const std::string& where);
void validate_sentence(const SentenceRecord& rec, const std::string& where);
void validate_talk(const Talk& talk, const std::string& where);
void validate_nbest(const NBestList& nbest, const std::string& where);

}  // namespace cascade
