#pragma once

// Corpus-level scoring: a serial reference driver and an OpenMP driver that
// must produce identical rows, plus row serialization.

#include <cstddef>
#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "widar/corpus.hpp"
#include "widar/metric.hpp"

namespace widar {

struct ScoreRow {
  std::string record_id;
  std::string metric;
  double score = 0.0;  // widar component selected by the config
  RougeScore widar;
  RougeScore rouge_w;
  RougeScore idss;
  double lambda_used = 0.0;
  std::string fingerprint;

  bool operator==(const ScoreRow&) const = default;
};

struct RecordFailure {
  std::string record_id;
  std::string message;
};

struct ScoreRun {
  std::vector<ScoreRow> rows;  // sorted by record_id
  std::vector<RecordFailure> failures;
};

ScoreRow score_record(const EvalRecord& record, const MetricConfig& cfg);

ScoreRun score_corpus_serial(const std::vector<EvalRecord>& records, const MetricConfig& cfg);

/// jobs <= 0 uses the OpenMP default thread count.
ScoreRun score_corpus_parallel(const std::vector<EvalRecord>& records, const MetricConfig& cfg,
                               int jobs = 0);

/// Six-decimal fixed formatting used by every writer.
std::string format_fixed(double v);

/// Header line (config, fingerprint, row count) then one row per line. Nothing
/// run-dependent goes in the file, so reruns are byte-identical.
void write_score_header(std::ostream& out, const MetricConfig& cfg, std::size_t rows);
void write_score_rows_jsonl(std::ostream& out, const std::vector<ScoreRow>& rows);
void write_score_rows_csv(std::ostream& out, const std::vector<ScoreRow>& rows);

/// Quotes a CSV field per RFC 4180 when needed.
std::string csv_field(const std::string& s);

/// Metric columns read back from a score file. Our own rows contribute their
/// `score` under their `metric` name; foreign rows contribute every numeric
/// top-level field. Throws kMixedConfig when one metric column carries rows
/// from different config fingerprints.
std::map<std::string, ScoreMap> read_score_columns(std::istream& in);

struct WeightDump {
  std::string record_id;
  std::size_t reference = 0;
  SentenceWeights weights;
};

std::vector<WeightDump> dump_weights(const std::vector<EvalRecord>& records, const MetricConfig& cfg,
                                     std::vector<RecordFailure>* failures = nullptr);
void write_weights_jsonl(std::ostream& out, const std::vector<WeightDump>& dumps);

}  // namespace widar
