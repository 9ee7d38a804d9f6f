// Command-line front end: score, weights, correlate, ablation, human-corr, bench.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "widar/corpus.hpp"
#include "widar/error.hpp"
#include "widar/meta_eval.hpp"
#include "widar/metric.hpp"
#include "widar/reproduce.hpp"
#include "widar/scoring.hpp"

namespace {

using namespace widar;

struct ConfigFlags {
  double lambda = 0.5;
  std::string strategy = "fixed";
  double theta1 = 0.1;
  double theta2 = 0.3;
  std::string variant = "L";
  std::string component = "f";
  std::string agg = "mean";
  bool literal = false;

  void add_to(CLI::App* app) {
    app->add_option("--lambda", lambda, "IDSS / weighted-ROUGE mixing weight")->capture_default_str();
    app->add_option("--lambda-strategy", strategy, "fixed | max-cov | mean-cov")
        ->check(CLI::IsMember({"fixed", "max-cov", "mean-cov"}))
        ->capture_default_str();
    app->add_option("--theta1", theta1, "coverage threshold")->capture_default_str();
    app->add_option("--theta2", theta2, "redundancy threshold")->capture_default_str();
    app->add_option("--variant", variant, "1 | 2 | L")->check(CLI::IsMember({"1", "2", "L", "l"}))->capture_default_str();
    app->add_option("--component", component, "r | p | f")->check(CLI::IsMember({"r", "p", "f"}))->capture_default_str();
    app->add_option("--agg", agg, "multi-reference aggregation: mean | max")
        ->check(CLI::IsMember({"mean", "max"}))
        ->capture_default_str();
    app->add_flag("--sentence-count-denominators", literal, "divide sentence-level ROUGE-L by sentence counts");
  }

  MetricConfig build() const {
    MetricConfig cfg;
    cfg.lambda = lambda;
    cfg.lambda_strategy = strategy == "max-cov"    ? LambdaStrategy::kMaxCoverage
                          : strategy == "mean-cov" ? LambdaStrategy::kMeanCoverage
                                                   : LambdaStrategy::kFixed;
    cfg.thresholds = {theta1, theta2};
    cfg.variant = variant == "1" ? Variant::kRouge1 : variant == "2" ? Variant::kRouge2 : Variant::kRougeL;
    cfg.component = component == "r" ? Component::kRecall
                    : component == "p" ? Component::kPrecision
                                       : Component::kFscore;
    cfg.multi_ref_agg = agg == "max" ? Aggregation::kMax : Aggregation::kMean;
    cfg.sentence_count_denominators = literal;
    cfg.validate();
    return cfg;
  }
};

struct CorpusFlags {
  std::string path;
  std::string format = "jsonl";

  void add_to(CLI::App* app, bool required = true) {
    auto* opt = app->add_option("--corpus", path, "corpus file");
    if (required) opt->required();
    app->add_option("--format", format, "jsonl | summeval")
        ->check(CLI::IsMember({"jsonl", "summeval"}))
        ->capture_default_str();
  }

  std::vector<EvalRecord> load() const { return load_corpus(path, parse_corpus_format(format)); }
};

// Writes to the named file, or stdout for "" / "-".
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_.open(path);
      if (!file_) throw Error(ErrorKind::kInvalidArgument, "cannot write '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

void report_failures(const std::vector<RecordFailure>& failures) {
  for (const auto& f : failures) std::cerr << "warning: record " << f.record_id << ": " << f.message << '\n';
}

JudgmentMap load_judgments(const std::string& path, const std::string& format) {
  if (format == "judgments") {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::kParseError, "cannot open judgments file '" + path + "'");
    return read_judgments(in);
  }
  return collect_judgments(load_corpus(path, parse_corpus_format(format)));
}

std::string report_json(const CorrelationReport& r, std::size_t rank) {
  std::string s = "{\"metric\":" + nlohmann::json(r.metric).dump();
  for (Dimension d : kDimensions) s += ",\"" + std::string(to_string(d)) + "\":" + format_fixed(r[d]);
  s += ",\"average\":" + format_fixed(r.average) + ",\"rank\":" + std::to_string(rank) +
       ",\"n\":" + std::to_string(r.n) + "}";
  return s;
}

void write_reports(const std::vector<CorrelationReport>& reports, const std::string& json_path) {
  std::cout << format_report_table(reports);
  if (json_path.empty()) return;
  std::vector<double> avg;
  for (const auto& r : reports) avg.push_back(r.average);
  const auto ranks = rank_descending(avg);
  std::vector<std::size_t> order(reports.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return avg[a] > avg[b]; });
  Output out(json_path);
  for (std::size_t i : order) out.stream() << report_json(reports[i], ranks[i]) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"WIDAR summary evaluation and Kendall-tau meta-evaluation"};
  app.require_subcommand(1);

  // score
  auto* score = app.add_subcommand("score", "score every record of a corpus");
  ConfigFlags score_cfg;
  CorpusFlags score_corpus;
  std::string score_out, score_csv;
  bool strict = false;
  int jobs = 0;
  score_cfg.add_to(score);
  score_corpus.add_to(score);
  score->add_option("--out", score_out, "JSONL output (default stdout)");
  score->add_option("--csv", score_csv, "also write CSV rows here");
  score->add_flag("--strict", strict, "exit nonzero when any record fails");
  score->add_option("--jobs", jobs, "worker threads (0 = all, 1 = serial)")->capture_default_str();

  // weights
  auto* weights = app.add_subcommand("weights", "dump coverage / redundancy weights");
  ConfigFlags weights_cfg;
  CorpusFlags weights_corpus;
  std::string weights_out;
  bool weights_strict = false;
  weights_cfg.add_to(weights);
  weights_corpus.add_to(weights);
  weights->add_option("--out", weights_out, "JSONL output (default stdout)");
  weights->add_flag("--strict", weights_strict, "exit nonzero when any record fails");

  // correlate
  auto* corr = app.add_subcommand("correlate", "Kendall tau of score columns against human judgments");
  std::vector<std::string> score_paths;
  std::string judgments_path, judgments_format = "jsonl", corr_json;
  bool tau_b = false, per_system = false;
  corr->add_option("--scores", score_paths, "score files (ours or foreign JSONL)")->required();
  corr->add_option("--judgments", judgments_path, "corpus or judgments file")->required();
  corr->add_option("--judgments-format", judgments_format, "jsonl | summeval | judgments")
      ->check(CLI::IsMember({"jsonl", "summeval", "judgments"}))
      ->capture_default_str();
  corr->add_option("--json", corr_json, "write reports as JSONL");
  corr->add_flag("--tau-b", tau_b, "use tau-b instead of the ties-excluded form");
  corr->add_flag("--per-system", per_system, "average within-system correlations");

  // ablation
  auto* ablation = app.add_subcommand("ablation", "component ablation correlations");
  ConfigFlags ablation_cfg;
  CorpusFlags ablation_corpus;
  std::string ablation_json;
  ablation_cfg.add_to(ablation);
  ablation_corpus.add_to(ablation);
  ablation->add_option("--json", ablation_json, "write reports as JSONL");
  ablation->add_option("--jobs", jobs, "worker threads")->capture_default_str();

  // human-corr
  auto* human = app.add_subcommand("human-corr", "Kendall tau between human judgment dimensions");
  std::string human_path, human_format = "jsonl";
  human->add_option("--judgments", human_path, "corpus or judgments file")->required();
  human->add_option("--judgments-format", human_format, "jsonl | summeval | judgments")
      ->check(CLI::IsMember({"jsonl", "summeval", "judgments"}))
      ->capture_default_str();

  // bench
  auto* bench = app.add_subcommand("bench", "time end-to-end scoring");
  ConfigFlags bench_cfg;
  CorpusFlags bench_corpus;
  std::size_t bench_n = 100;
  int bench_jobs = 1;
  bench_cfg.add_to(bench);
  bench_corpus.add_to(bench, false);
  bench->add_option("-n,--records", bench_n, "records to score")->capture_default_str();
  bench->add_option("--jobs", bench_jobs, "worker threads (1 = serial)")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*score) {
      const auto cfg = score_cfg.build();
      const auto records = score_corpus.load();
      const auto start = std::chrono::steady_clock::now();
      const auto run = jobs == 1 ? score_corpus_serial(records, cfg) : score_corpus_parallel(records, cfg, jobs);
      const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      Output out(score_out);
      write_score_header(out.stream(), cfg, run.rows.size());
      write_score_rows_jsonl(out.stream(), run.rows);
      if (!score_csv.empty()) {
        Output csv(score_csv);
        write_score_rows_csv(csv.stream(), run.rows);
      }
      report_failures(run.failures);
      std::cerr << "scored " << run.rows.size() << " records in " << format_fixed(elapsed) << " s\n";
      return strict && !run.failures.empty() ? 1 : 0;
    }
    if (*weights) {
      const auto cfg = weights_cfg.build();
      std::vector<RecordFailure> failures;
      const auto dumps = dump_weights(weights_corpus.load(), cfg, &failures);
      Output out(weights_out);
      write_weights_jsonl(out.stream(), dumps);
      report_failures(failures);
      return weights_strict && !failures.empty() ? 1 : 0;
    }
    if (*corr) {
      const auto judgments = load_judgments(judgments_path, judgments_format);
      CorrelateOptions options;
      options.variant = tau_b ? TauVariant::kTauB : TauVariant::kTiesExcluded;
      options.granularity = per_system ? Granularity::kPerSystem : Granularity::kPooled;
      std::vector<CorrelationReport> reports;
      for (const auto& path : score_paths) {
        std::ifstream in(path);
        if (!in) throw Error(ErrorKind::kParseError, "cannot open score file '" + path + "'");
        for (const auto& [metric, scores] : read_score_columns(in)) {
          reports.push_back(correlate(metric, scores, judgments, options));
        }
      }
      write_reports(reports, corr_json);
      return 0;
    }
    if (*ablation) {
      const auto rows = run_ablation(ablation_corpus.load(), ablation_cfg.build(), {}, jobs);
      std::vector<CorrelationReport> reports;
      for (const auto& row : rows) reports.push_back(row.report);
      // Ablation tables keep their fixed row order.
      std::cout << format_report_table(reports, false);
      if (!ablation_json.empty()) {
        Output out(ablation_json);
        for (const auto& r : reports) out.stream() << report_json(r, 0) << '\n';
      }
      return 0;
    }
    if (*human) {
      const auto m = judgment_intercorrelation(load_judgments(human_path, human_format));
      std::cout << std::string(12, ' ');
      for (Dimension d : kDimensions) std::cout << "  " << std::setw(11) << to_string(d);
      std::cout << '\n';
      for (Dimension a : kDimensions) {
        std::cout << std::left << std::setw(12) << to_string(a) << std::right;
        for (Dimension b : kDimensions) {
          std::cout << "  " << std::setw(11) << format_fixed(m[static_cast<int>(a)][static_cast<int>(b)]);
        }
        std::cout << '\n';
      }
      return 0;
    }
    if (*bench) {
      const auto cfg = bench_cfg.build();
      const auto records = bench_corpus.path.empty() ? synthetic_corpus({}) : bench_corpus.load();
      const auto report = run_bench(records, cfg, bench_n, bench_jobs);
      std::cout << "metric          " << cfg.metric_name() << '\n'
                << "records         " << report.records << '\n'
                << "threads         " << report.threads << '\n'
                << "total_seconds   " << format_fixed(report.total_seconds) << '\n'
                << "per_record_ms   " << format_fixed(report.per_record_seconds * 1e3) << '\n'
                << "machine         " << report.machine << '\n';
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
