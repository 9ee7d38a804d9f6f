#pragma once

// Corpus records and their JSONL / SummEval readers.

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "widar/meta_eval.hpp"
#include "widar/text.hpp"

namespace widar {

struct EvalRecord {
  std::string id;
  TextUnit document;
  std::vector<TextUnit> references;
  TextUnit summary;
  std::optional<JudgmentRecord> judgments;
  std::string system;

  bool operator==(const EvalRecord&) const = default;
};

enum class CorpusFormat { kJsonl, kSummEval };

CorpusFormat parse_corpus_format(const std::string& name);

/// Native JSONL: one object per line with `id`, `document`, `references`,
/// `summary` and optional `judgments` / `system`. Text fields are either a
/// raw string (split naively) or a list of sentence strings.
std::vector<EvalRecord> read_jsonl_corpus(std::istream& in);

/// SummEval `model_annotations.aligned.paired.jsonl` layout. Expert
/// annotations are averaged per dimension; record id is "<id>/<model_id>".
std::vector<EvalRecord> read_summeval_corpus(std::istream& in);

std::vector<EvalRecord> load_corpus(const std::string& path, CorpusFormat format);

/// Canonical JSONL writer; read_jsonl_corpus reproduces the records.
void write_jsonl_corpus(std::ostream& out, const std::vector<EvalRecord>& records);

JudgmentMap collect_judgments(const std::vector<EvalRecord>& records);

/// Standalone judgments file: lines of {id, coherence, consistency, fluency,
/// relevance[, system]}.
JudgmentMap read_judgments(std::istream& in);

struct SyntheticSpec {
  std::size_t records = 100;
  std::size_t document_sentences = 30;
  std::size_t summary_sentences = 3;
  std::size_t reference_sentences = 3;
  std::size_t references = 1;
  std::size_t min_sentence_tokens = 15;
  std::size_t max_sentence_tokens = 30;
  std::size_t vocabulary = 5000;
  std::uint64_t seed = 17;
};

/// Deterministic news-like records: summaries and references reuse fragments
/// of document sentences over a Zipf-like vocabulary.
std::vector<EvalRecord> synthetic_corpus(const SyntheticSpec& spec);

}  // namespace widar
