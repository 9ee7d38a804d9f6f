#include "widar/reproduce.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <thread>

#include <sys/utsname.h>

#include "widar/error.hpp"
#include "widar/rouge.hpp"
#include "widar/scoring.hpp"

namespace widar {

namespace {

ScoreMap collect(const ScoreRun& run, double ScoreRow::*field) {
  if (!run.failures.empty()) {
    throw Error(ErrorKind::kEmptyInput, "record " + run.failures.front().record_id +
                                            " failed: " + run.failures.front().message);
  }
  ScoreMap out;
  for (const auto& row : run.rows) out.emplace(row.record_id, row.*field);
  return out;
}

}  // namespace

double plain_rouge(const EvalRecord& record, const MetricConfig& cfg) {
  if (record.references.empty()) throw Error(ErrorKind::kNoReferences, "record has no references");
  TextUnit summary;
  summary.sentences.push_back(flatten(record.summary));
  double acc = 0.0;
  bool first = true;
  for (const auto& ref : record.references) {
    TextUnit reference;
    reference.sentences.push_back(flatten(ref));
    RougeScore s;
    switch (cfg.variant) {
      case Variant::kRouge1: s = rouge_n(summary, reference, 1); break;
      case Variant::kRouge2: s = rouge_n(summary, reference, 2); break;
      case Variant::kRougeL: s = rouge_l_pair(summary.sentences.front(), reference.sentences.front()); break;
    }
    const double v = component(s, cfg.component);
    if (cfg.multi_ref_agg == Aggregation::kMax) {
      acc = first ? v : std::max(acc, v);
    } else {
      acc += v;
    }
    first = false;
  }
  return cfg.multi_ref_agg == Aggregation::kMax ? acc : acc / static_cast<double>(record.references.size());
}

ScoreMap metric_scores(const std::vector<EvalRecord>& records, const MetricConfig& cfg, int jobs) {
  return collect(score_corpus_parallel(records, cfg, jobs), &ScoreRow::score);
}

std::vector<AblationRow> run_ablation(const std::vector<EvalRecord>& records, const MetricConfig& cfg,
                                      const CorrelateOptions& options, int jobs) {
  const auto judgments = collect_judgments(records);
  const std::string k = to_string(cfg.variant);
  std::vector<AblationRow> rows;
  auto add = [&](std::string name, const ScoreMap& scores) {
    rows.push_back({name, correlate(name, scores, judgments, options)});
  };

  const auto full = score_corpus_parallel(records, cfg, jobs);
  add("WIDAR_" + k, collect(full, &ScoreRow::score));

  auto weighted_only = cfg;
  weighted_only.lambda_strategy = LambdaStrategy::kFixed;
  weighted_only.lambda = 1.0;
  add("ROUGE-" + k + "_W", metric_scores(records, weighted_only, jobs));

  auto no_red = weighted_only;
  no_red.weight_mode = WeightMode::kCoverageOnly;
  add("-W_red", metric_scores(records, no_red, jobs));

  auto no_cov = weighted_only;
  no_cov.weight_mode = WeightMode::kRedundancyOnly;
  add("-W_cov", metric_scores(records, no_cov, jobs));

  auto sentence_level = weighted_only;
  sentence_level.weight_mode = WeightMode::kUniform;
  add("ROUGE-" + k + "_SL", metric_scores(records, sentence_level, jobs));

  ScoreMap plain;
  for (const auto& r : records) plain.emplace(r.id, plain_rouge(r, cfg));
  add("ROUGE-" + k, plain);

  ScoreMap idss_scores;
  for (const auto& row : full.rows) idss_scores.emplace(row.record_id, row.idss.fscore);
  add("IDSS", idss_scores);
  return rows;
}

std::string machine_info() {
  std::ostringstream out;
  utsname u{};
  if (uname(&u) == 0) out << u.sysname << ' ' << u.release << ' ' << u.machine << "; ";
  out << std::thread::hardware_concurrency() << " hardware threads; ";
#if defined(__clang__)
  out << "clang " << __clang_major__ << '.' << __clang_minor__;
#elif defined(__GNUC__)
  out << "gcc " << __GNUC__ << '.' << __GNUC_MINOR__;
#endif
  return out.str();
}

BenchReport run_bench(const std::vector<EvalRecord>& records, const MetricConfig& cfg, std::size_t n,
                      int jobs) {
  if (n == 0) throw Error(ErrorKind::kInvalidArgument, "bench needs at least one record");
  if (records.empty()) throw Error(ErrorKind::kEmptyInput, "bench corpus is empty");
  std::vector<EvalRecord> batch;
  batch.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    batch.push_back(records[i % records.size()]);
    if (i >= records.size()) batch.back().id += "#" + std::to_string(i / records.size());
  }
  const auto start = std::chrono::steady_clock::now();
  const auto run = jobs == 1 ? score_corpus_serial(batch, cfg) : score_corpus_parallel(batch, cfg, jobs);
  const auto stop = std::chrono::steady_clock::now();
  if (!run.failures.empty()) {
    throw Error(ErrorKind::kEmptyInput, "bench record " + run.failures.front().record_id +
                                            " failed: " + run.failures.front().message);
  }
  BenchReport report;
  report.records = n;
  report.total_seconds = std::chrono::duration<double>(stop - start).count();
  report.per_record_seconds = report.total_seconds / static_cast<double>(n);
  report.threads = jobs;
  report.machine = machine_info();
  return report;
}

std::string format_report_table(std::vector<CorrelationReport> reports, bool with_ranks) {
  std::stable_sort(reports.begin(), reports.end(),
                   [](const CorrelationReport& a, const CorrelationReport& b) { return a.average > b.average; });
  std::array<std::vector<std::size_t>, 5> ranks;
  for (std::size_t c = 0; c < 5; ++c) {
    std::vector<double> col;
    for (const auto& r : reports) col.push_back(c < 4 ? r.tau[c] : r.average);
    ranks[c] = rank_descending(col);
  }
  const std::vector<std::string> header = {"Metric", "Coherence", "Consistency", "Fluency", "Relevance", "Average"};
  std::vector<std::vector<std::string>> cells{header};
  for (std::size_t i = 0; i < reports.size(); ++i) {
    std::vector<std::string> row{reports[i].metric};
    for (std::size_t c = 0; c < 5; ++c) {
      std::string cell = format_fixed(c < 4 ? reports[i].tau[c] : reports[i].average);
      if (with_ranks) cell += " (" + std::to_string(ranks[c][i]) + ")";
      row.push_back(cell);
    }
    cells.push_back(std::move(row));
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream out;
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c == 0) {
        out << row[c] << std::string(width[c] - row[c].size(), ' ');
      } else {
        out << "  " << std::string(width[c] - row[c].size(), ' ') << row[c];
      }
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace widar
