#include "widar/corpus.hpp"

#include <cmath>
#include <fstream>
#include <random>
#include <set>

#include <json.hpp>

#include "widar/error.hpp"

namespace widar {

using nlohmann::json;

namespace {

[[noreturn]] void fail(ErrorKind kind, std::size_t line, const std::string& what) {
  throw Error(kind, "line " + std::to_string(line) + ": " + what);
}

const json& require(const json& obj, const char* field, std::size_t line) {
  const auto it = obj.find(field);
  if (it == obj.end() || it->is_null()) {
    fail(ErrorKind::kMissingField, line, std::string("missing field '") + field + "'");
  }
  return *it;
}

TextUnit parse_text(const json& value, const char* field, std::size_t line) {
  if (value.is_string()) return split_sentences(value.get<std::string>());
  if (value.is_array()) {
    std::vector<std::string> sentences;
    for (const auto& s : value) {
      if (!s.is_string()) fail(ErrorKind::kParseError, line, std::string("'") + field + "' must hold strings");
      sentences.push_back(s.get<std::string>());
    }
    return from_sentences(sentences);
  }
  fail(ErrorKind::kParseError, line, std::string("'") + field + "' must be a string or a list of strings");
}

double parse_dimension(const json& value, const char* name, std::size_t line) {
  double v = 0.0;
  if (value.is_number()) {
    v = value.get<double>();
  } else if (value.is_array() && !value.empty()) {
    double sum = 0.0;
    for (const auto& x : value) {
      if (!x.is_number()) fail(ErrorKind::kParseError, line, std::string("non-numeric ") + name + " annotation");
      sum += x.get<double>();
    }
    v = sum / static_cast<double>(value.size());
  } else {
    fail(ErrorKind::kParseError, line, std::string("judgment '") + name + "' must be a number or list of numbers");
  }
  if (!(v >= 1.0 && v <= 5.0)) {
    fail(ErrorKind::kParseError, line, std::string("judgment '") + name + "' outside [1,5]");
  }
  return v;
}

JudgmentRecord parse_judgment(const json& obj, const std::string& id, std::size_t line) {
  if (!obj.is_object()) fail(ErrorKind::kParseError, line, "'judgments' must be an object");
  JudgmentRecord j;
  j.record_id = id;
  for (Dimension d : kDimensions) j[d] = parse_dimension(require(obj, to_string(d), line), to_string(d), line);
  return j;
}

json parse_line(const std::string& text, std::size_t line) {
  try {
    auto obj = json::parse(text);
    if (!obj.is_object()) fail(ErrorKind::kParseError, line, "expected a JSON object");
    return obj;
  } catch (const json::parse_error& e) {
    fail(ErrorKind::kParseError, line, e.what());
  }
}

std::string id_string(const json& value, std::size_t line) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_number_integer()) return std::to_string(value.get<long long>());
  fail(ErrorKind::kParseError, line, "'id' must be a string or integer");
}

bool blank(const std::string& s) {
  return s.find_first_not_of(" \t\r\n") == std::string::npos;
}

json sentences_json(const TextUnit& unit) {
  json out = json::array();
  for (const auto& s : unit.sentences) {
    std::string joined;
    for (const auto& t : s.tokens) {
      if (!joined.empty()) joined.push_back(' ');
      joined += t;
    }
    out.push_back(joined);
  }
  return out;
}

}  // namespace

CorpusFormat parse_corpus_format(const std::string& name) {
  if (name == "jsonl") return CorpusFormat::kJsonl;
  if (name == "summeval") return CorpusFormat::kSummEval;
  throw Error(ErrorKind::kInvalidArgument, "unknown corpus format '" + name + "' (jsonl|summeval)");
}

std::vector<EvalRecord> read_jsonl_corpus(std::istream& in) {
  std::vector<EvalRecord> records;
  std::set<std::string> seen;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (blank(text)) continue;
    const auto obj = parse_line(text, line);
    EvalRecord r;
    r.id = id_string(require(obj, "id", line), line);
    r.document = parse_text(require(obj, "document", line), "document", line);
    const auto& refs = require(obj, "references", line);
    if (!refs.is_array()) fail(ErrorKind::kParseError, line, "'references' must be a list");
    for (const auto& ref : refs) r.references.push_back(parse_text(ref, "references", line));
    if (r.references.empty()) fail(ErrorKind::kMissingField, line, "'references' is empty");
    r.summary = parse_text(require(obj, "summary", line), "summary", line);
    if (const auto it = obj.find("system"); it != obj.end() && it->is_string()) r.system = it->get<std::string>();
    if (const auto it = obj.find("judgments"); it != obj.end() && !it->is_null()) {
      r.judgments = parse_judgment(*it, r.id, line);
      r.judgments->system = r.system;
    }
    if (!seen.insert(r.id).second) fail(ErrorKind::kDuplicateId, line, "duplicate id '" + r.id + "'");
    records.push_back(std::move(r));
  }
  return records;
}

std::vector<EvalRecord> read_summeval_corpus(std::istream& in) {
  std::vector<EvalRecord> records;
  std::set<std::string> seen;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (blank(text)) continue;
    const auto obj = parse_line(text, line);
    EvalRecord r;
    const std::string article = id_string(require(obj, "id", line), line);
    r.system = obj.contains("model_id") ? obj["model_id"].get<std::string>() : std::string();
    r.id = r.system.empty() ? article : article + "/" + r.system;

    const json* doc = nullptr;
    for (const char* key : {"text", "document", "article"}) {
      if (obj.contains(key) && !obj[key].is_null()) {
        doc = &obj[key];
        break;
      }
    }
    if (doc == nullptr) {
      fail(ErrorKind::kMissingField, line,
           "missing field 'text' (source article); use the paired annotation file that has "
           "articles attached");
    }
    r.document = parse_text(*doc, "text", line);

    const json* summary = obj.contains("decoded") ? &obj["decoded"] : nullptr;
    if (summary == nullptr && obj.contains("summary")) summary = &obj["summary"];
    if (summary == nullptr) fail(ErrorKind::kMissingField, line, "missing field 'decoded'");
    r.summary = parse_text(*summary, "decoded", line);

    const auto& refs = require(obj, "references", line);
    if (!refs.is_array() || refs.empty()) fail(ErrorKind::kMissingField, line, "'references' is empty");
    for (const auto& ref : refs) r.references.push_back(parse_text(ref, "references", line));

    if (const auto it = obj.find("expert_annotations"); it != obj.end() && it->is_array() && !it->empty()) {
      JudgmentRecord j;
      j.record_id = r.id;
      j.system = r.system;
      for (Dimension d : kDimensions) {
        double sum = 0.0;
        for (const auto& ann : *it) {
          const auto& v = require(ann, to_string(d), line);
          if (!v.is_number()) fail(ErrorKind::kParseError, line, std::string("non-numeric ") + to_string(d));
          sum += v.get<double>();
        }
        j[d] = sum / static_cast<double>(it->size());
      }
      r.judgments = j;
    }
    if (!seen.insert(r.id).second) fail(ErrorKind::kDuplicateId, line, "duplicate id '" + r.id + "'");
    records.push_back(std::move(r));
  }
  return records;
}

std::vector<EvalRecord> load_corpus(const std::string& path, CorpusFormat format) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kParseError, "cannot open corpus file '" + path + "'");
  return format == CorpusFormat::kJsonl ? read_jsonl_corpus(in) : read_summeval_corpus(in);
}

void write_jsonl_corpus(std::ostream& out, const std::vector<EvalRecord>& records) {
  for (const auto& r : records) {
    json obj;
    obj["id"] = r.id;
    obj["document"] = sentences_json(r.document);
    obj["references"] = json::array();
    for (const auto& ref : r.references) obj["references"].push_back(sentences_json(ref));
    obj["summary"] = sentences_json(r.summary);
    if (!r.system.empty()) obj["system"] = r.system;
    if (r.judgments) {
      json j;
      for (Dimension d : kDimensions) j[to_string(d)] = (*r.judgments)[d];
      obj["judgments"] = j;
    }
    out << obj.dump() << '\n';
  }
}

JudgmentMap collect_judgments(const std::vector<EvalRecord>& records) {
  JudgmentMap out;
  for (const auto& r : records) {
    if (r.judgments) out.emplace(r.id, *r.judgments);
  }
  return out;
}

JudgmentMap read_judgments(std::istream& in) {
  JudgmentMap out;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (blank(text)) continue;
    const auto obj = parse_line(text, line);
    const std::string id = id_string(require(obj, "id", line), line);
    auto j = parse_judgment(obj.contains("judgments") ? obj["judgments"] : obj, id, line);
    if (const auto it = obj.find("system"); it != obj.end() && it->is_string()) j.system = it->get<std::string>();
    if (!out.emplace(id, j).second) fail(ErrorKind::kDuplicateId, line, "duplicate id '" + id + "'");
  }
  return out;
}

std::vector<EvalRecord> synthetic_corpus(const SyntheticSpec& spec) {
  std::mt19937_64 rng(spec.seed);
  // Zipf-like vocabulary sampling through a cumulative table.
  std::vector<double> cdf(spec.vocabulary);
  double acc = 0.0;
  for (std::size_t k = 0; k < spec.vocabulary; ++k) {
    acc += 1.0 / std::pow(static_cast<double>(k + 1), 1.05);
    cdf[k] = acc;
  }
  std::uniform_real_distribution<double> unit(0.0, acc);
  auto word = [&] {
    const auto k = static_cast<std::size_t>(std::lower_bound(cdf.begin(), cdf.end(), unit(rng)) - cdf.begin());
    return "w" + std::to_string(k);
  };
  std::uniform_int_distribution<std::size_t> length(spec.min_sentence_tokens, spec.max_sentence_tokens);
  auto sentence = [&] {
    TokenizedSentence s;
    const std::size_t n = length(rng);
    for (std::size_t i = 0; i < n; ++i) s.tokens.push_back(word());
    return s;
  };
  // A summary-like sentence: a contiguous fragment of a document sentence
  // with some tokens substituted.
  auto paraphrase = [&](const TextUnit& doc) {
    std::uniform_int_distribution<std::size_t> pick(0, doc.size() - 1);
    const auto& src = doc.sentences[pick(rng)].tokens;
    const std::size_t len = std::min(src.size(), length(rng) / 2 + 5);
    std::uniform_int_distribution<std::size_t> start(0, src.size() - len);
    const std::size_t from = start(rng);
    std::bernoulli_distribution swap(0.25);
    TokenizedSentence s;
    for (std::size_t i = from; i < from + len; ++i) s.tokens.push_back(swap(rng) ? word() : src[i]);
    return s;
  };

  std::vector<EvalRecord> records;
  records.reserve(spec.records);
  std::uniform_real_distribution<double> score(1.0, 5.0);
  for (std::size_t r = 0; r < spec.records; ++r) {
    EvalRecord rec;
    char id[32];
    std::snprintf(id, sizeof(id), "syn-%05zu", r);
    rec.id = id;
    rec.system = "M" + std::to_string(r % 16);
    for (std::size_t i = 0; i < spec.document_sentences; ++i) rec.document.sentences.push_back(sentence());
    for (std::size_t k = 0; k < spec.references; ++k) {
      TextUnit ref;
      for (std::size_t i = 0; i < spec.reference_sentences; ++i) ref.sentences.push_back(paraphrase(rec.document));
      rec.references.push_back(std::move(ref));
    }
    for (std::size_t i = 0; i < spec.summary_sentences; ++i) rec.summary.sentences.push_back(paraphrase(rec.document));
    JudgmentRecord j;
    j.record_id = rec.id;
    j.system = rec.system;
    for (Dimension d : kDimensions) j[d] = std::round(score(rng) * 3.0) / 3.0;
    rec.judgments = j;
    records.push_back(std::move(rec));
  }
  return records;
}

}  // namespace widar
