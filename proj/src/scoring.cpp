#include "widar/scoring.hpp"

#include <algorithm>
#include <cstdio>
#include <optional>

#include <json.hpp>
#ifdef _OPENMP
#include <omp.h>
#endif

#include "widar/error.hpp"

namespace widar {

using nlohmann::json;

namespace {

struct Slot {
  std::optional<ScoreRow> row;
  std::optional<RecordFailure> failure;
};

Slot score_slot(const EvalRecord& record, const MetricConfig& cfg) {
  Slot slot;
  try {
    slot.row = score_record(record, cfg);
  } catch (const std::exception& e) {
    slot.failure = RecordFailure{record.id, e.what()};
  }
  return slot;
}

ScoreRun assemble(std::vector<Slot>& slots) {
  ScoreRun run;
  for (auto& s : slots) {
    if (s.row) run.rows.push_back(std::move(*s.row));
    if (s.failure) run.failures.push_back(std::move(*s.failure));
  }
  std::sort(run.rows.begin(), run.rows.end(),
            [](const ScoreRow& a, const ScoreRow& b) { return a.record_id < b.record_id; });
  std::sort(run.failures.begin(), run.failures.end(),
            [](const RecordFailure& a, const RecordFailure& b) { return a.record_id < b.record_id; });
  return run;
}

std::string score_json(const RougeScore& s) {
  return "{\"r\":" + format_fixed(s.recall) + ",\"p\":" + format_fixed(s.precision) +
         ",\"f\":" + format_fixed(s.fscore) + "}";
}

}  // namespace

ScoreRow score_record(const EvalRecord& record, const MetricConfig& cfg) {
  const auto result = widar_multi(record.summary, record.references, record.document, cfg);
  ScoreRow row;
  row.record_id = record.id;
  row.metric = cfg.metric_name();
  row.widar = result.widar;
  row.rouge_w = result.rouge_w;
  row.idss = result.idss;
  row.score = component(result.widar, cfg.component);
  row.lambda_used = result.lambda_used;
  row.fingerprint = cfg.fingerprint();
  return row;
}

ScoreRun score_corpus_serial(const std::vector<EvalRecord>& records, const MetricConfig& cfg) {
  cfg.validate();
  std::vector<Slot> slots;
  slots.reserve(records.size());
  for (const auto& r : records) slots.push_back(score_slot(r, cfg));
  return assemble(slots);
}

ScoreRun score_corpus_parallel(const std::vector<EvalRecord>& records, const MetricConfig& cfg,
                               int jobs) {
  cfg.validate();
  std::vector<Slot> slots(records.size());
  const auto n = static_cast<std::ptrdiff_t>(records.size());
#ifdef _OPENMP
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
#else
  (void)jobs;
#endif
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    slots[static_cast<std::size_t>(i)] = score_slot(records[static_cast<std::size_t>(i)], cfg);
  }
  return assemble(slots);
}

std::string format_fixed(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  // Normalize negative zero.
  if (std::string_view(buf) == "-0.000000") return "0.000000";
  return buf;
}

void write_score_header(std::ostream& out, const MetricConfig& cfg, std::size_t rows) {
  json header;
  header["kind"] = "header";
  header["metric"] = cfg.metric_name();
  header["config"] = cfg.canonical();
  header["fingerprint"] = cfg.fingerprint();
  header["rows"] = rows;
  out << header.dump() << '\n';
}

void write_score_rows_jsonl(std::ostream& out, const std::vector<ScoreRow>& rows) {
  for (const auto& row : rows) {
    out << "{\"id\":" << json(row.record_id).dump() << ",\"metric\":" << json(row.metric).dump()
        << ",\"score\":" << format_fixed(row.score) << ",\"widar\":" << score_json(row.widar)
        << ",\"rouge_w\":" << score_json(row.rouge_w) << ",\"idss\":" << score_json(row.idss)
        << ",\"lambda\":" << format_fixed(row.lambda_used)
        << ",\"fingerprint\":" << json(row.fingerprint).dump() << "}\n";
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

void write_score_rows_csv(std::ostream& out, const std::vector<ScoreRow>& rows) {
  out << "id,metric,score,widar_r,widar_p,widar_f,rouge_w_r,rouge_w_p,rouge_w_f,idss_r,idss_p,idss_f,"
         "lambda,fingerprint\r\n";
  for (const auto& row : rows) {
    out << csv_field(row.record_id) << ',' << csv_field(row.metric) << ',' << format_fixed(row.score);
    for (const auto* s : {&row.widar, &row.rouge_w, &row.idss}) {
      out << ',' << format_fixed(s->recall) << ',' << format_fixed(s->precision) << ','
          << format_fixed(s->fscore);
    }
    out << ',' << format_fixed(row.lambda_used) << ',' << csv_field(row.fingerprint) << "\r\n";
  }
}

std::map<std::string, ScoreMap> read_score_columns(std::istream& in) {
  std::map<std::string, ScoreMap> columns;
  std::map<std::string, std::string> fingerprints;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (text.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    json obj;
    try {
      obj = json::parse(text);
    } catch (const json::parse_error& e) {
      throw Error(ErrorKind::kParseError, "line " + std::to_string(line) + ": " + e.what());
    }
    if (obj.value("kind", "") == "header") continue;
    if (!obj.contains("id")) {
      throw Error(ErrorKind::kMissingField, "line " + std::to_string(line) + ": missing field 'id'");
    }
    const std::string id = obj["id"].is_string() ? obj["id"].get<std::string>() : obj["id"].dump();
    if (obj.contains("metric") && obj.contains("score")) {
      const std::string metric = obj["metric"].get<std::string>();
      const std::string fp = obj.value("fingerprint", "");
      auto [it, inserted] = fingerprints.emplace(metric, fp);
      if (!inserted && it->second != fp) {
        throw Error(ErrorKind::kMixedConfig, "line " + std::to_string(line) + ": metric '" + metric +
                                                 "' mixes config fingerprints " + it->second + " and " + fp);
      }
      columns[metric][id] = obj["score"].get<double>();
      continue;
    }
    for (const auto& [key, value] : obj.items()) {
      if (key != "id" && value.is_number()) columns[key][id] = value.get<double>();
    }
  }
  return columns;
}

std::vector<WeightDump> dump_weights(const std::vector<EvalRecord>& records, const MetricConfig& cfg,
                                     std::vector<RecordFailure>* failures) {
  cfg.validate();
  std::vector<const EvalRecord*> sorted;
  for (const auto& r : records) sorted.push_back(&r);
  std::sort(sorted.begin(), sorted.end(), [](const EvalRecord* a, const EvalRecord* b) { return a->id < b->id; });
  std::vector<WeightDump> out;
  for (const auto* r : sorted) {
    try {
      if (r->references.empty()) throw Error(ErrorKind::kNoReferences, "record has no references");
      std::vector<WeightDump> local;
      for (std::size_t k = 0; k < r->references.size(); ++k) {
        local.push_back({r->id, k, compute_weights(r->references[k], r->document, cfg.thresholds, cfg.weight_mode)});
      }
      out.insert(out.end(), local.begin(), local.end());
    } catch (const std::exception& e) {
      if (failures == nullptr) throw;
      failures->push_back({r->id, e.what()});
    }
  }
  return out;
}

void write_weights_jsonl(std::ostream& out, const std::vector<WeightDump>& dumps) {
  auto list = [](const std::vector<double>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i != 0) s += ',';
      s += format_fixed(v[i]);
    }
    return s + "]";
  };
  for (const auto& d : dumps) {
    out << "{\"id\":" << json(d.record_id).dump() << ",\"reference\":" << d.reference
        << ",\"w_cov\":" << list(d.weights.w_cov) << ",\"w_red\":" << list(d.weights.w_red)
        << ",\"w\":" << list(d.weights.w) << "}\n";
  }
}

}  // namespace widar
