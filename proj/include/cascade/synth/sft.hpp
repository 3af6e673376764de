#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cascade/backends/clients.hpp"
#include "cascade/core/types.hpp"
#include "cascade/docape/chunking.hpp"

namespace cascade::synth {

enum class Half { A, B };

const char* half_name(Half half);

enum class SftTask { asr_refine, doc_ape };

struct SftMeta {
  std::string talk_id;                  // or utterance id for asr_refine
  std::optional<int> chunk_index;      // doc_ape only
  std::optional<int> first_sentence;   // doc_ape only
  std::optional<int> last_sentence;    // doc_ape only
  std::optional<Half> half;            // data half (doc_ape cross-fit)
  std::optional<Half> model_half;      // half whose models produced the hypotheses
};

struct SftRecord {
  SftTask task;
  std::string prompt;
  std::string completion;
  SftMeta meta;
};

// Deterministic split by sorted talk_id alternation: even positions to A,
// odd to B. Halves are disjoint, cover the corpus, sizes differ by <= 1.
// Requires at least two talks.
std::pair<std::vector<Talk>, std::vector<Talk>> split_halves(
    const std::vector<Talk>& talks);

struct AsrSftResult {
  std::vector<SftRecord> records;
  int skipped_missing_ref = 0;
};

// One record per utterance: the refinement prompt over the top-k candidates,
// the reference as completion. Utterances without a reference are skipped
// and counted.
AsrSftResult make_asr_sft(const std::vector<RefNBest>& corpus, int k);

// One record per chunk with an empty payload: the post-editing prompt, the
// chunk's references joined by " <SS> " as completion. Every sentence needs
// src, mt and ref. Optional half annotations mark cross-fit provenance.
std::vector<SftRecord> make_ape_sft(
    const std::vector<Talk>& talks, int budget,
    const docape::TokenCounter& counter,
    const std::map<std::string, std::pair<Half, Half>>* halves = nullptr);

struct CrossInferResult {
  std::vector<Talk> talks;  // src = cross ASR output, mt = cross MT output
  // talk_id -> (data half, model half)
  std::map<std::string, std::pair<Half, Half>> halves;
};

// Runs the other half's ASR and MT over each half's talks using the gold
// segmentation, producing (noisy transcript, MT hypothesis, reference)
// triples aligned 1:1 with the references.
CrossInferResult cross_infer(const std::vector<Talk>& half_a,
                             const std::vector<Talk>& half_b,
                             ASRClient& asr_trained_on_a, MTClient& mt_trained_on_a,
                             ASRClient& asr_trained_on_b, MTClient& mt_trained_on_b);

// Desk-scale stand-ins for the per-half fine-tuned models: a seeded noise
// oracle over the gold transcripts/references. The clients preserve the wire
// contract so cross_infer is exercised end to end.
struct NoiseOracleClients {
  std::unique_ptr<ASRClient> asr;
  std::unique_ptr<MTClient> mt;
};

// `talks_to_process` must be the talks this client pair will serve (the
// OTHER half), in cross_infer's processing order (sorted by talk_id).
NoiseOracleClients make_noise_oracle_clients(
    const std::vector<Talk>& talks_to_process, double noise_rate, uint64_t seed);

// Per-sentence utterance spans: the gold segments when they align 1:1 with
// the sentences, index-based pseudo-spans otherwise.
std::vector<AudioSpan> utterance_spans(const Talk& talk);

// sft.jsonl: {task, prompt, completion, meta{...}}
void save_sft_file(const std::vector<SftRecord>& records, const std::string& path);
std::vector<SftRecord> load_sft_file(const std::string& path);

}  // namespace cascade::synth
