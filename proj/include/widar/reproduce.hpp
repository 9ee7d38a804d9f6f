#pragma once

// Runners for the correlation, ablation and timing experiments.

#include <cstddef>
#include <string>
#include <vector>

#include "widar/corpus.hpp"
#include "widar/meta_eval.hpp"
#include "widar/metric.hpp"

namespace widar {

/// Plain ROUGE of the configured variant over flattened token streams
/// (n-grams and the LCS may cross sentence boundaries), aggregated over
/// references like WIDAR.
double plain_rouge(const EvalRecord& record, const MetricConfig& cfg);

/// Per-record scores of one metric configuration, keyed by record id.
ScoreMap metric_scores(const std::vector<EvalRecord>& records, const MetricConfig& cfg, int jobs = 0);

struct AblationRow {
  std::string name;
  CorrelationReport report;
};

/// Rows: full WIDAR, weighted ROUGE alone, -W_red, -W_cov, sentence-level
/// ROUGE, plain ROUGE, IDSS alone.
std::vector<AblationRow> run_ablation(const std::vector<EvalRecord>& records, const MetricConfig& cfg,
                                      const CorrelateOptions& options = {}, int jobs = 0);

struct BenchReport {
  std::size_t records = 0;
  double total_seconds = 0.0;
  double per_record_seconds = 0.0;
  int threads = 1;
  std::string machine;
};

/// Times end-to-end scoring of `n` records (cycling through `records`).
/// Throws kInvalidArgument when n == 0 or the corpus is empty.
BenchReport run_bench(const std::vector<EvalRecord>& records, const MetricConfig& cfg, std::size_t n,
                      int jobs = 1);

std::string machine_info();

/// Aligned text table, rows sorted by average descending, each cell
/// annotated with its per-column rank.
std::string format_report_table(std::vector<CorrelationReport> reports, bool with_ranks = true);

}  // namespace widar
