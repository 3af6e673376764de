#include "cascade/core/corpus.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cascade/core/errors.hpp"
#include "cascade/core/text.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using nlohmann::ordered_json;

namespace cascade {

namespace {

struct FieldReader {
  const json& rec;
  const std::string& where;

  const json& require(const char* key) const {
    if (!rec.contains(key)) {
      throw DataError(where + ": missing field '" + key + "'");
    }
    return rec.at(key);
  }

  std::string str(const char* key) const {
    const json& v = require(key);
    if (!v.is_string()) {
      throw DataError(where + ": field '" + key + "' must be a string");
    }
    return v.get<std::string>();
  }

  std::optional<std::string> opt_str(const char* key) const {
    if (!rec.contains(key) || rec.at(key).is_null()) return std::nullopt;
    if (!rec.at(key).is_string()) {
      throw DataError(where + ": field '" + key + "' must be a string");
    }
    return rec.at(key).get<std::string>();
  }

  double num(const char* key) const {
    const json& v = require(key);
    if (!v.is_number()) {
      throw DataError(where + ": field '" + key + "' must be a number");
    }
    return v.get<double>();
  }

  std::optional<double> opt_num(const char* key) const {
    if (!rec.contains(key) || rec.at(key).is_null()) return std::nullopt;
    if (!rec.at(key).is_number()) {
      throw DataError(where + ": field '" + key + "' must be a number");
    }
    return rec.at(key).get<double>();
  }

  int integer(const char* key) const {
    const json& v = require(key);
    if (!v.is_number_integer()) {
      throw DataError(where + ": field '" + key + "' must be an integer");
    }
    return v.get<int>();
  }

  void reject_unknown(const std::set<std::string>& known) const {
    for (const auto& [key, value] : rec.items()) {
      (void)value;
      if (!known.count(key)) {
        throw DataError(where + ": unknown field '" + key + "'");
      }
    }
  }
};

struct CorpusBuilder {
  std::map<std::string, Talk> talks;
  // Sentences arrive in file order; sorted and index-checked at the end.
  std::map<std::string, std::vector<SentenceRecord>> sentences;

  void add_talk(const json& rec, const std::string& where) {
    FieldReader r{rec, where};
    r.reject_unknown({"talk_id", "audio", "duration_s", "src_lang", "tgt_lang"});
    Talk talk;
    talk.talk_id = r.str("talk_id");
    talk.src_lang = r.str("src_lang");
    talk.tgt_lang = r.str("tgt_lang");
    auto audio = r.opt_str("audio");
    auto duration = r.opt_num("duration_s");
    if (audio) {
      talk.audio = AudioRef{*audio, duration};
    } else if (duration) {
      throw DataError(where + ": field 'duration_s' given without 'audio'");
    }
    if (talks.count(talk.talk_id)) {
      throw DataError(where + ": duplicate field 'talk_id' value '" + talk.talk_id + "'");
    }
    talks.emplace(talk.talk_id, std::move(talk));
  }

  void add_segment(const json& rec, const std::string& where) {
    FieldReader r{rec, where};
    r.reject_unknown({"talk_id", "start_s", "end_s", "text"});
    std::string talk_id = r.str("talk_id");
    Segment seg;
    seg.start_s = r.num("start_s");
    seg.end_s = r.num("end_s");
    seg.text = r.opt_str("text");
    auto it = talks.find(talk_id);
    if (it == talks.end()) {
      throw DataError(where + ": field 'talk_id' references unknown talk '" + talk_id + "'");
    }
    it->second.segments.push_back(std::move(seg));
  }

  void add_sentence(const json& rec, const std::string& where) {
    FieldReader r{rec, where};
    r.reject_unknown({"talk_id", "index", "src", "mt", "ape", "ref"});
    std::string talk_id = r.str("talk_id");
    if (!talks.count(talk_id)) {
      throw DataError(where + ": field 'talk_id' references unknown talk '" + talk_id + "'");
    }
    SentenceRecord rec_out;
    rec_out.index = r.integer("index");
    rec_out.src = r.str("src");
    rec_out.mt = r.opt_str("mt");
    rec_out.ape = r.opt_str("ape");
    rec_out.ref = r.opt_str("ref");
    validate_sentence(rec_out, where);
    sentences[talk_id].push_back(std::move(rec_out));
  }

  std::vector<Talk> finish(const std::string& where) {
    std::vector<Talk> out;
    out.reserve(talks.size());
    for (auto& [id, talk] : talks) {
      auto it = sentences.find(id);
      if (it != sentences.end()) {
        std::stable_sort(it->second.begin(), it->second.end(),
                         [](const SentenceRecord& a, const SentenceRecord& b) {
                           return a.index < b.index;
                         });
        talk.sentences = std::move(it->second);
      }
      std::stable_sort(talk.segments.begin(), talk.segments.end(),
                       [](const Segment& a, const Segment& b) {
                         return a.start_s < b.start_s;
                       });
      validate_talk(talk, where);
      out.push_back(std::move(talk));
    }
    return out;  // std::map iteration already sorts by talk_id
  }
};

json parse_line(const std::string& line, const std::string& where) {
  try {
    json rec = json::parse(line);
    if (!rec.is_object()) throw DataError(where + ": record must be a JSON object");
    return rec;
  } catch (const json::exception& e) {
    throw DataError(where + ": invalid JSON: " + e.what());
  }
}

void load_corpus_file(const std::string& path, CorpusBuilder& builder) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open corpus file: " + path);
  std::string line;
  int lineno = 0;
  // Two passes so segment/sentence records may precede their talk record.
  std::vector<std::pair<int, json>> deferred;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    std::string where = path + ":" + std::to_string(lineno);
    json rec = parse_line(line, where);
    if (rec.contains("index")) {
      deferred.emplace_back(lineno, std::move(rec));
    } else if (rec.contains("start_s")) {
      deferred.emplace_back(lineno, std::move(rec));
    } else if (rec.contains("src_lang")) {
      builder.add_talk(rec, where);
    } else {
      throw DataError(where + ": record is none of talk/segment/sentence "
                      "(expected field 'src_lang', 'start_s' or 'index')");
    }
  }
  for (auto& [no, rec] : deferred) {
    std::string where = path + ":" + std::to_string(no);
    if (rec.contains("index")) {
      builder.add_sentence(rec, where);
    } else {
      builder.add_segment(rec, where);
    }
  }
}

void emit_talk(const Talk& talk, std::ostream& os) {
  ordered_json t;
  t["talk_id"] = talk.talk_id;
  if (talk.audio) {
    t["audio"] = talk.audio->path;
    if (talk.audio->duration_s) t["duration_s"] = *talk.audio->duration_s;
  }
  t["src_lang"] = talk.src_lang;
  t["tgt_lang"] = talk.tgt_lang;
  os << t.dump() << "\n";
  for (const auto& seg : talk.segments) {
    ordered_json s;
    s["talk_id"] = talk.talk_id;
    s["start_s"] = seg.start_s;
    s["end_s"] = seg.end_s;
    if (seg.text) s["text"] = *seg.text;
    os << s.dump() << "\n";
  }
  for (const auto& sent : talk.sentences) {
    ordered_json s;
    s["talk_id"] = talk.talk_id;
    s["index"] = sent.index;
    s["src"] = sent.src;
    if (sent.mt) s["mt"] = *sent.mt;
    if (sent.ape) s["ape"] = *sent.ape;
    if (sent.ref) s["ref"] = *sent.ref;
    os << s.dump() << "\n";
  }
}

}  // namespace

std::vector<Talk> load_corpus(const std::string& path) {
  CorpusBuilder builder;
  if (fs::is_directory(path)) {
    std::vector<std::string> files;
    for (const auto& entry : fs::directory_iterator(path)) {
      if (entry.path().extension() == ".jsonl") files.push_back(entry.path().string());
    }
    std::sort(files.begin(), files.end());
    for (const auto& f : files) load_corpus_file(f, builder);
  } else if (fs::exists(path)) {
    load_corpus_file(path, builder);
  } else {
    throw DataError("corpus path does not exist: " + path);
  }
  return builder.finish(path);
}

std::string corpus_to_jsonl(const std::vector<Talk>& talks) {
  std::vector<const Talk*> sorted;
  sorted.reserve(talks.size());
  for (const auto& t : talks) sorted.push_back(&t);
  std::sort(sorted.begin(), sorted.end(),
            [](const Talk* a, const Talk* b) { return a->talk_id < b->talk_id; });
  std::ostringstream os;
  for (const Talk* t : sorted) emit_talk(*t, os);
  return os.str();
}

void save_corpus(const std::vector<Talk>& talks, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write corpus file: " + path);
  out << corpus_to_jsonl(talks);
}

std::vector<RefNBest> load_nbest_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open n-best file: " + path);
  std::vector<RefNBest> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    std::string where = path + ":" + std::to_string(lineno);
    json rec = parse_line(line, where);
    FieldReader r{rec, where};
    r.reject_unknown({"utterance_id", "hypotheses", "ref"});
    RefNBest item;
    item.nbest.utterance_id = r.str("utterance_id");
    const json& hyps = r.require("hypotheses");
    if (!hyps.is_array() || hyps.empty()) {
      throw DataError(where + ": field 'hypotheses' must be a non-empty array");
    }
    for (const auto& h : hyps) {
      if (!h.is_object()) {
        throw DataError(where + ": field 'hypotheses' entries must be objects");
      }
      FieldReader hr{h, where};
      hr.reject_unknown({"text", "score"});
      item.nbest.hypotheses.push_back({hr.str("text"), hr.num("score")});
    }
    item.ref = r.opt_str("ref");
    validate_nbest(item.nbest, where);
    out.push_back(std::move(item));
  }
  return out;
}

void save_nbest_file(const std::vector<RefNBest>& lists, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write n-best file: " + path);
  for (const auto& item : lists) {
    ordered_json rec;
    rec["utterance_id"] = item.nbest.utterance_id;
    ordered_json hyps = ordered_json::array();
    for (const auto& h : item.nbest.hypotheses) {
      hyps.push_back({{"text", h.text}, {"score", h.score}});
    }
    rec["hypotheses"] = std::move(hyps);
    if (item.ref) rec["ref"] = *item.ref;
    out << rec.dump() << "\n";
  }
}

}  // namespace cascade
