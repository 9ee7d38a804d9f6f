// Acceptance suite: one PASS / FAIL / SKIP line per criterion.
//
//   acceptance [--summeval PATH] [--published-scores PATH ...]
//
// Criteria 6 and 7 need the SummEval paired annotation file; without it they
// report SKIP.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "support/generators.hpp"
#include "support/oracle.hpp"
#include "widar/corpus.hpp"
#include "widar/meta_eval.hpp"
#include "widar/metric.hpp"
#include "widar/reproduce.hpp"
#include "widar/scoring.hpp"

namespace {

using namespace widar;
namespace oracle = widar::oracle;

enum class Outcome { kPass, kFail, kSkip };

struct Verdict {
  Outcome outcome;
  std::string detail;
};

Verdict pass(std::string d) { return {Outcome::kPass, std::move(d)}; }
Verdict fail(std::string d) { return {Outcome::kFail, std::move(d)}; }
Verdict skip(std::string d) { return {Outcome::kSkip, std::move(d)}; }

std::string fmt(double v, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

std::string fmt_sci(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

double elapsed_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

bool close(const RougeScore& fast, const oracle::ExactScore& slow, double tol, double& worst) {
  if (fast.zero_denominator != slow.zero_denominator) {
    worst = INFINITY;
    return false;
  }
  for (auto [a, b] : {std::pair{fast.recall, slow.recall}, std::pair{fast.precision, slow.precision},
                      std::pair{fast.fscore, slow.fscore}}) {
    worst = std::max(worst, std::fabs(a - b.value()));
  }
  return worst <= tol;
}

// 1. Exhaustive-style small-instance oracle equivalence.
Verdict oracle_equivalence() {
  constexpr int kCases = 10000;
  constexpr double kTol = 1e-12;
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(20240101);
  double worst = 0.0;
  for (int c = 0; c < kCases; ++c) {
    const auto cand = testing::random_unit(rng, 3, 5, 4);
    const auto ref = testing::random_unit(rng, 3, 5, 4);
    const auto doc = testing::random_unit(rng, 3, 5, 4);
    const auto cs = oracle::sentences_of(cand), rs = oracle::sentences_of(ref), ds = oracle::sentences_of(doc);
    const auto weights = compute_weights(ref, doc, {0.1, 0.3});
    const auto exact = oracle::weights_brute(rs, ds, oracle::Rational(1, 10), oracle::Rational(3, 10));
    const std::vector<oracle::Rational> none;

    bool ok = true;
    for (std::size_t n = 1; n <= 2; ++n) {
      ok &= close(rouge_n(cand, ref, n), oracle::rouge_n_brute(cs, rs, n), kTol, worst);
      ok &= close(rouge_n_sl(cand, ref, n), oracle::rouge_n_brute(cs, rs, n), kTol, worst);
      ok &= close(rouge_n_sl(cand, ref, n, &weights), oracle::rouge_n_brute(cs, rs, n, exact.w), kTol, worst);
    }
    ok &= close(rouge_l_summary(cand, ref), oracle::rouge_l_brute(cs, rs), kTol, worst);
    ok &= close(rouge_l_sl(cand, ref), oracle::rouge_l_brute(cs, rs, none), kTol, worst);
    ok &= close(rouge_l_sl(cand, ref, &weights), oracle::rouge_l_brute(cs, rs, exact.w), kTol, worst);
    if (!ok) return fail("case " + std::to_string(c) + " differs, max |err| = " + fmt_sci(worst));
  }
  const double secs = elapsed_since(start);
  const std::string detail = std::to_string(kCases) + " cases, max |err| " + fmt_sci(worst) + ", " +
                             fmt(secs, 2) + " s (limit 60 s)";
  return secs <= 60.0 ? pass(detail) : fail(detail);
}

// 2. ROUGE-1_SL == ROUGE-1, exactly.
Verdict identity_law() {
  std::mt19937_64 rng(2);
  for (int c = 0; c < 1000; ++c) {
    const auto s = testing::random_unit(rng, 5, 12, 8);
    const auto r = testing::random_unit(rng, 5, 12, 8);
    const auto a = rouge_n_sl(s, r, 1), b = rouge_n(s, r, 1);
    if (!(a.recall == b.recall && a.precision == b.precision && a.fscore == b.fscore)) {
      return fail("case " + std::to_string(c) + " differs");
    }
  }
  return pass("1000 inputs, bit-equal");
}

struct RandomRecord {
  TextUnit summary, reference, document;
};

RandomRecord random_record(std::mt19937_64& rng) {
  return {testing::random_unit(rng, 4, 10, 8), testing::random_unit(rng, 4, 10, 8),
          testing::random_unit(rng, 12, 14, 8)};
}

// 3. widar(0) = IDSS, widar(1) = ROUGE_W, widar(0.5) = midpoint.
Verdict affine_law() {
  constexpr double kTol = 1e-12;
  std::mt19937_64 rng(3);
  double worst = 0.0;
  for (int c = 0; c < 1000; ++c) {
    const auto rec = random_record(rng);
    MetricConfig cfg;
    cfg.variant = static_cast<Variant>(c % 3);
    cfg.lambda = 0.0;
    const auto w0 = widar::widar(rec.summary, rec.reference, rec.document, cfg);
    cfg.lambda = 1.0;
    const auto w1 = widar::widar(rec.summary, rec.reference, rec.document, cfg);
    cfg.lambda = 0.5;
    const auto wh = widar::widar(rec.summary, rec.reference, rec.document, cfg);
    for (Component k : {Component::kRecall, Component::kPrecision, Component::kFscore}) {
      worst = std::max(worst, std::fabs(component(w0.widar, k) - w0.idss.fscore));
      worst = std::max(worst, std::fabs(component(w1.widar, k) - component(w1.rouge_w, k)));
      worst = std::max(worst, std::fabs(component(wh.widar, k) -
                                        (component(w0.widar, k) + component(w1.widar, k)) / 2));
    }
  }
  const std::string detail = "1000 records, max |err| " + fmt_sci(worst);
  return worst <= kTol ? pass(detail) : fail(detail);
}

// 4. Weight contract.
Verdict weight_contract() {
  std::mt19937_64 rng(4);
  const std::vector<double> grid{0.0, 0.05, 0.1, 0.2, 0.3, 0.5, 0.8, 1.0};
  std::size_t fallbacks = 0;
  for (int c = 0; c < 1000; ++c) {
    const auto rec = random_record(rng);
    const auto w = compute_weights(rec.reference, rec.document, {0.1, 0.3});
    double sum = 0.0;
    for (std::size_t i = 0; i < w.w.size(); ++i) {
      if (w.w_cov[i] < 0 || w.w_cov[i] > 1 || w.w_red[i] < 0 || w.w_red[i] > 1) {
        return fail("case " + std::to_string(c) + ": weight outside [0,1]");
      }
      sum += w.w[i];
    }
    if (w.fallback) {
      ++fallbacks;
      for (double v : w.w) {
        if (v != 1.0) return fail("case " + std::to_string(c) + ": fallback not all ones");
      }
    } else if (std::fabs(sum - static_cast<double>(rec.reference.size())) > 1e-9) {
      return fail("case " + std::to_string(c) + ": sum " + std::to_string(sum));
    }
    for (std::size_t k = 1; k < grid.size(); ++k) {
      const auto cl = coverage_weights(rec.reference, rec.document, grid[k - 1]);
      const auto ch = coverage_weights(rec.reference, rec.document, grid[k]);
      const auto rl = redundancy_weights(rec.reference, grid[k - 1]);
      const auto rh = redundancy_weights(rec.reference, grid[k]);
      for (std::size_t i = 0; i < cl.size(); ++i) {
        if (ch[i] > cl[i] || rh[i] < rl[i]) return fail("case " + std::to_string(c) + ": threshold monotonicity");
      }
    }
  }
  return pass("1000 records (" + std::to_string(fallbacks) + " all-ones fallbacks)");
}

// 5. Kendall tau: fast path vs O(n^2) enumeration, plus hand cases.
Verdict kendall_oracle() {
  using V = std::vector<double>;
  if (kendall_tau(V{1, 2, 3}, V{1, 2, 3}) != 1.0 || kendall_tau(V{1, 2, 3}, V{3, 2, 1}) != -1.0 ||
      kendall_tau(V{1, 2, 3}, V{1, 3, 2}) != 1.0 / 3.0) {
    return fail("hand cases");
  }
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::size_t> size(2, 50);
  for (int c = 0; c < 200; ++c) {
    const std::size_t n = size(rng);
    std::uniform_int_distribution<int> level(0, c % 2 ? 4 : 1000);
    V x(n), y(n);
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = level(rng);
      y[i] = level(rng);
    }
    const auto pairs = oracle::kendall_pairs_brute(x, y);
    if (pairs.concordant + pairs.discordant == 0) continue;
    const double expected = static_cast<double>(pairs.concordant - pairs.discordant) /
                            static_cast<double>(pairs.concordant + pairs.discordant);
    if (kendall_tau(x, y) != expected) return fail("sequence " + std::to_string(c) + " differs");
  }
  return pass("hand cases 1, -1, 1/3; 200 random sequences bit-equal");
}

constexpr std::array<double, 4> kPublishedWidarL{0.149, 0.176, 0.119, 0.250};
constexpr double kPublishedWidar1Average = 0.176;
constexpr double kTableTolerance = 0.03;

std::string dims(const CorrelationReport& r) {
  return "(" + fmt(r.tau[0], 3) + ", " + fmt(r.tau[1], 3) + ", " + fmt(r.tau[2], 3) + ", " + fmt(r.tau[3], 3) +
         ") avg " + fmt(r.average, 3);
}

// 6. Table reproduction on SummEval.
Verdict table_reproduction(const std::vector<EvalRecord>* summeval, const std::vector<std::string>& published) {
  if (summeval == nullptr) return skip("SummEval paired annotation file not supplied (--summeval PATH)");
  const auto judgments = collect_judgments(*summeval);
  MetricConfig cfg;
  const auto widar_l = correlate("WIDAR_L", metric_scores(*summeval, cfg), judgments);
  cfg.variant = Variant::kRouge1;
  const auto widar_1 = correlate("WIDAR_1", metric_scores(*summeval, cfg), judgments);

  bool ok = true;
  std::string diff;
  for (Dimension d : kDimensions) {
    const auto k = static_cast<std::size_t>(d);
    const double delta = widar_l.tau[k] - kPublishedWidarL[k];
    ok &= std::fabs(delta) <= kTableTolerance;
    diff += std::string(" ") + to_string(d) + " " + fmt(widar_l.tau[k], 3) + " vs " + fmt(kPublishedWidarL[k], 3) +
            " (" + (delta >= 0 ? "+" : "") + fmt(delta, 3) + ")";
  }
  const double delta1 = widar_1.average - kPublishedWidar1Average;
  ok &= std::fabs(delta1) <= kTableTolerance;
  diff += "; WIDAR_1 avg " + fmt(widar_1.average, 3) + " vs " + fmt(kPublishedWidar1Average, 3);

  if (!published.empty()) {
    std::vector<CorrelationReport> reports{widar_l, widar_1};
    for (const auto& path : published) {
      std::ifstream in(path);
      for (const auto& [metric, scores] : read_score_columns(in)) {
        reports.push_back(correlate(metric, scores, judgments));
      }
    }
    std::vector<double> avg;
    for (const auto& r : reports) avg.push_back(r.average);
    diff += "; WIDAR_1 rank " + std::to_string(rank_descending(avg)[1]) + " of " + std::to_string(reports.size());
  }
  return ok ? pass("n=" + std::to_string(widar_l.n) + diff) : fail("per-dimension diff:" + diff);
}

// 7. Ablation orderings on SummEval.
Verdict ablation_directions(const std::vector<EvalRecord>* summeval) {
  if (summeval == nullptr) return skip("SummEval paired annotation file not supplied (--summeval PATH)");
  const auto rows = run_ablation(*summeval, MetricConfig{});
  auto find = [&](const std::string& name) -> const CorrelationReport& {
    for (const auto& r : rows) {
      if (r.name == name) return r.report;
    }
    throw std::runtime_error("missing ablation row " + name);
  };
  const auto& full = find("WIDAR_L");
  const auto& weighted = find("ROUGE-L_W");
  const auto& sl = find("ROUGE-L_SL");
  const auto& plain = find("ROUGE-L");
  const auto& id = find("IDSS");
  std::string detail;
  bool ok = true;
  auto check = [&](bool cond, const std::string& what) {
    ok &= cond;
    detail += std::string(cond ? " ok:" : " FAILED:") + what;
  };
  check(full[Dimension::kConsistency] > weighted[Dimension::kConsistency], "WIDAR_L>ROUGE-L_W consistency");
  check(full[Dimension::kFluency] > weighted[Dimension::kFluency], "WIDAR_L>ROUGE-L_W fluency");
  check(weighted[Dimension::kRelevance] > sl[Dimension::kRelevance], "ROUGE-L_W>ROUGE-L_SL relevance");
  check(id[Dimension::kConsistency] > plain[Dimension::kConsistency], "IDSS>ROUGE-L consistency");
  return ok ? pass(detail) : fail(detail);
}

// 8. 100 CNN/DailyMail-scale records in <= 4 s.
Verdict performance() {
  SyntheticSpec spec;  // 30-sentence documents, 3-sentence summaries, one reference
  spec.records = 100;
  const auto records = synthetic_corpus(spec);
  const auto report = run_bench(records, MetricConfig{}, 100, 1);
  const std::string detail = "100 records serial in " + fmt(report.total_seconds, 3) + " s (limit 4 s; " +
                             report.machine + ")";
  return report.total_seconds <= 4.0 ? pass(detail) : fail(detail);
}

// 9. Repeated and serial-vs-parallel runs produce identical score payloads.
Verdict determinism() {
  SyntheticSpec spec;
  spec.records = 60;
  spec.references = 3;
  spec.document_sentences = 15;
  auto records = synthetic_corpus(spec);
  std::shuffle(records.begin(), records.end(), std::mt19937_64(9));
  auto payload = [&](const ScoreRun& run) {
    std::ostringstream out;
    write_score_rows_jsonl(out, run.rows);
    write_score_rows_csv(out, run.rows);
    return out.str();
  };
  MetricConfig cfg;
  const auto first = payload(score_corpus_serial(records, cfg));
  if (first != payload(score_corpus_serial(records, cfg))) return fail("serial reruns differ");
  for (int jobs : {2, 3, 8}) {
    if (first != payload(score_corpus_parallel(records, cfg, jobs))) {
      return fail("parallel run with " + std::to_string(jobs) + " threads differs");
    }
  }
  return pass("60 records, 3 references: serial x2 and parallel {2,3,8} threads byte-identical");
}

}  // namespace

int main(int argc, char** argv) {
  std::string summeval_path;
  std::vector<std::string> published;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--summeval" && i + 1 < argc) {
      summeval_path = argv[++i];
    } else if (arg == "--published-scores" && i + 1 < argc) {
      published.push_back(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: acceptance [--summeval PATH] [--published-scores PATH ...]\n");
      return 2;
    }
  }

  std::vector<EvalRecord> summeval;
  const std::vector<EvalRecord>* summeval_ptr = nullptr;
  if (!summeval_path.empty()) {
    summeval = load_corpus(summeval_path, CorpusFormat::kSummEval);
    summeval_ptr = &summeval;
  }

  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"1 oracle equivalence", oracle_equivalence},
      {"2 ROUGE-1_SL identity", identity_law},
      {"3 affine lambda law", affine_law},
      {"4 weight contract", weight_contract},
      {"5 Kendall oracle", kendall_oracle},
      {"6 SummEval table reproduction", [&] { return table_reproduction(summeval_ptr, published); }},
      {"7 SummEval ablation directions", [&] { return ablation_directions(summeval_ptr); }},
      {"8 performance", performance},
      {"9 determinism", determinism},
  };

  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Verdict v;
    try {
      v = run();
    } catch (const std::exception& e) {
      v = fail(std::string("exception: ") + e.what());
    }
    const char* tag = v.outcome == Outcome::kPass ? "PASS" : v.outcome == Outcome::kFail ? "FAIL" : "SKIP";
    std::printf("[%s] criterion %s: %s\n", tag, name.c_str(), v.detail.c_str());
    std::fflush(stdout);
    if (v.outcome == Outcome::kFail) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
