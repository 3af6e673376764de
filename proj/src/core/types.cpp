#include "cascade/core/types.hpp"

#include <string>

#include "cascade/core/errors.hpp"
#include "cascade/core/text.hpp"

namespace cascade {

namespace {

void check_text_field(const std::string& value, const char* field,
                      const std::string& where) {
  if (contains_delimiter(value)) {
    throw DataError(where + ": field '" + field +
                    "' contains the reserved delimiter \"<SS>\"");
  }
}

}  // namespace

void validate_segment(const Segment& seg, std::optional<double> talk_duration,
                      const std::string& where) {
  if (seg.start_s < 0.0 || !(seg.start_s < seg.end_s)) {
    throw DataError(where + ": field 'start_s'/'end_s' must satisfy 0 <= start < end, got [" +
                    std::to_string(seg.start_s) + ", " + std::to_string(seg.end_s) + "]");
  }
  if (talk_duration && seg.end_s > *talk_duration + 1e-9) {
    throw DataError(where + ": field 'end_s' exceeds talk duration " +
                    std::to_string(*talk_duration));
  }
}

void validate_sentence(const SentenceRecord& rec, const std::string& where) {
  if (rec.index < 0) {
    throw DataError(where + ": field 'index' must be non-negative");
  }
  if (trim(rec.src).empty()) {
    throw DataError(where + ": field 'src' must be non-empty");
  }
  check_text_field(rec.src, "src", where);
  if (rec.mt) check_text_field(*rec.mt, "mt", where);
  if (rec.ape) check_text_field(*rec.ape, "ape", where);
  if (rec.ref) check_text_field(*rec.ref, "ref", where);
}

void validate_talk(const Talk& talk, const std::string& where) {
  if (talk.talk_id.empty()) {
    throw DataError(where + ": field 'talk_id' must be non-empty");
  }
  std::optional<double> duration;
  if (talk.audio) duration = talk.audio->duration_s;
  double prev_start = -1.0;
  for (const auto& seg : talk.segments) {
    validate_segment(seg, duration, where + " (talk '" + talk.talk_id + "')");
    if (seg.start_s < prev_start) {
      throw DataError(where + ": talk '" + talk.talk_id +
                      "' segments not ordered by start time");
    }
    prev_start = seg.start_s;
  }
  for (size_t i = 0; i < talk.sentences.size(); ++i) {
    const auto& rec = talk.sentences[i];
    validate_sentence(rec, where + " (talk '" + talk.talk_id + "')");
    if (rec.index != static_cast<int>(i)) {
      throw DataError(where + ": talk '" + talk.talk_id +
                      "' sentence indices not contiguous: expected " +
                      std::to_string(i) + ", got field 'index' = " +
                      std::to_string(rec.index));
    }
  }
}

void validate_nbest(const NBestList& nbest, const std::string& where) {
  if (nbest.utterance_id.empty()) {
    throw DataError(where + ": field 'utterance_id' must be non-empty");
  }
  if (nbest.hypotheses.empty()) {
    throw DataError(where + ": field 'hypotheses' must be non-empty");
  }
  for (size_t i = 1; i < nbest.hypotheses.size(); ++i) {
    if (nbest.hypotheses[i].score > nbest.hypotheses[i - 1].score) {
      throw DataError(where + ": field 'hypotheses' scores must be non-increasing (rank order)");
    }
  }
}

}  // namespace cascade
