#include "widar/metric.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <map>

#include "widar/error.hpp"

namespace widar {

namespace {

void check_fraction(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw Error(ErrorKind::kInvalidArgument, std::string(name) + " must lie in [0,1]");
  }
}

double weight_at(const SentenceWeights* weights, std::size_t j) {
  return weights == nullptr ? 1.0 : weights->w[j];
}

void check_weights(const SentenceWeights* weights, const TextUnit& reference) {
  if (weights != nullptr && weights->w.size() != reference.size()) {
    throw Error(ErrorKind::kLengthMismatch, "weights do not match reference sentence count");
  }
}

void check_units(const TextUnit& summary, const TextUnit& reference) {
  if (summary.empty()) throw Error(ErrorKind::kEmptyInput, "summary has no sentences");
  if (reference.empty()) throw Error(ErrorKind::kEmptyInput, "reference has no sentences");
}

void cap_precision(RougeScore& score) {
  if (score.precision > 1.0) {
    score.precision = 1.0;
    score.fscore = harmonic_mean(score.recall, score.precision);
  }
}

}  // namespace

void MetricConfig::validate() const {
  check_fraction(lambda, "lambda");
  check_fraction(thresholds.theta1, "theta1");
  check_fraction(thresholds.theta2, "theta2");
}

std::string to_string(Variant v) {
  switch (v) {
    case Variant::kRouge1: return "1";
    case Variant::kRouge2: return "2";
    case Variant::kRougeL: return "L";
  }
  return "L";
}

std::string to_string(Component c) {
  switch (c) {
    case Component::kRecall: return "r";
    case Component::kPrecision: return "p";
    case Component::kFscore: return "f";
  }
  return "f";
}

std::string to_string(LambdaStrategy s) {
  switch (s) {
    case LambdaStrategy::kFixed: return "fixed";
    case LambdaStrategy::kMaxCoverage: return "max-cov";
    case LambdaStrategy::kMeanCoverage: return "mean-cov";
  }
  return "fixed";
}

std::string to_string(Aggregation a) { return a == Aggregation::kMax ? "max" : "mean"; }

std::string to_string(WeightMode m) {
  switch (m) {
    case WeightMode::kFull: return "full";
    case WeightMode::kCoverageOnly: return "coverage-only";
    case WeightMode::kRedundancyOnly: return "redundancy-only";
    case WeightMode::kUniform: return "uniform";
  }
  return "full";
}

std::string MetricConfig::canonical() const {
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "variant=%s;component=%s;lambda=%.17g;strategy=%s;theta1=%.17g;theta2=%.17g;"
                "agg=%s;literal=%d;weights=%s",
                to_string(variant).c_str(), to_string(component).c_str(),
                lambda_strategy == LambdaStrategy::kFixed ? lambda : 0.0,
                to_string(lambda_strategy).c_str(), thresholds.theta1, thresholds.theta2,
                to_string(multi_ref_agg).c_str(), sentence_count_denominators ? 1 : 0,
                to_string(weight_mode).c_str());
  return buf;
}

std::string MetricConfig::fingerprint() const {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : canonical()) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

std::string MetricConfig::metric_name() const { return "WIDAR_" + to_string(variant); }

RougeScore rouge_n_sl(const TextUnit& summary, const TextUnit& reference, std::size_t n,
                      const SentenceWeights* weights) {
  check_units(summary, reference);
  check_weights(weights, reference);
  if (n == 0) throw Error(ErrorKind::kInvalidArgument, "n-gram order must be positive");

  const auto cand = ngrams(summary, n);

  struct RefGram {
    std::size_t count = 0;   // occurrences over all reference sentences
    double weighted = 0.0;   // occurrences scaled by sentence weight
  };
  std::map<NGram, RefGram> ref;
  double recall_den = 0.0;
  for (std::size_t j = 0; j < reference.size(); ++j) {
    const double w = weight_at(weights, j);
    const auto grams = ngrams(reference.sentences[j], n);
    for (const auto& [gram, count] : grams.counts) {
      auto& slot = ref[gram];
      slot.count += count;
      slot.weighted += w * static_cast<double>(count);
    }
    recall_den += w * static_cast<double>(grams.total());
  }

  // Clipped matches of each n-gram type, attributed to reference sentences in
  // proportion to how often each contains it.
  double overlap = 0.0;
  for (const auto& [gram, rg] : ref) {
    const auto it = cand.counts.find(gram);
    if (it == cand.counts.end()) continue;
    const auto matched = static_cast<double>(std::min(it->second, rg.count));
    overlap += matched * rg.weighted / static_cast<double>(rg.count);
  }
  auto score = make_score(overlap, recall_den, static_cast<double>(cand.total()));
  cap_precision(score);
  return score;
}

RougeScore rouge_l_sl(const TextUnit& summary, const TextUnit& reference,
                      const SentenceWeights* weights, bool literal_denominators) {
  check_units(summary, reference);
  check_weights(weights, reference);
  double hits = 0.0;
  double recall_den = 0.0;
  for (std::size_t i = 0; i < reference.size(); ++i) {
    const double w = weight_at(weights, i);
    const auto& r = reference.sentences[i];
    hits += w * static_cast<double>(union_lcs(r, summary));
    recall_den += literal_denominators ? w : w * static_cast<double>(r.size());
  }
  const double precision_den = literal_denominators ? static_cast<double>(summary.size())
                                                    : static_cast<double>(summary.token_count());
  auto score = make_score(hits, recall_den, precision_den);
  if (!literal_denominators) cap_precision(score);
  return score;
}

RougeScore idss(const TextUnit& summary, const TextUnit& document) {
  if (summary.empty()) throw Error(ErrorKind::kEmptyInput, "summary has no sentences");
  if (document.empty()) throw Error(ErrorKind::kEmptyDocument, "document has no sentences");
  return rouge_l_summary(summary, document);
}

RougeScore rouge_w(const TextUnit& summary, const TextUnit& reference,
                   const SentenceWeights& weights, const MetricConfig& cfg) {
  switch (cfg.variant) {
    case Variant::kRouge1: return rouge_n_sl(summary, reference, 1, &weights);
    case Variant::kRouge2: return rouge_n_sl(summary, reference, 2, &weights);
    case Variant::kRougeL:
      return rouge_l_sl(summary, reference, &weights, cfg.sentence_count_denominators);
  }
  return {};
}

double resolve_lambda(const MetricConfig& cfg, const SentenceWeights& weights) {
  switch (cfg.lambda_strategy) {
    case LambdaStrategy::kFixed: return cfg.lambda;
    case LambdaStrategy::kMaxCoverage:
      return weights.w_cov.empty() ? 0.0 : *std::max_element(weights.w_cov.begin(), weights.w_cov.end());
    case LambdaStrategy::kMeanCoverage: {
      if (weights.w_cov.empty()) return 0.0;
      double sum = 0.0;
      for (double v : weights.w_cov) sum += v;
      return sum / static_cast<double>(weights.w_cov.size());
    }
  }
  return cfg.lambda;
}

RougeScore combine(double idss_f, const RougeScore& weighted, double lambda) {
  RougeScore out;
  out.recall = (1.0 - lambda) * idss_f + lambda * weighted.recall;
  out.precision = (1.0 - lambda) * idss_f + lambda * weighted.precision;
  out.fscore = (1.0 - lambda) * idss_f + lambda * weighted.fscore;
  out.zero_denominator = weighted.zero_denominator;
  return out;
}

WidarResult widar(const TextUnit& summary, const TextUnit& reference, const TextUnit& document,
                  const RougeScore& precomputed_idss, const MetricConfig& cfg) {
  cfg.validate();
  check_units(summary, reference);
  WidarResult result;
  result.idss = precomputed_idss;
  result.weights.push_back(compute_weights(reference, document, cfg.thresholds, cfg.weight_mode));
  const auto& weights = result.weights.front();
  result.rouge_w = rouge_w(summary, reference, weights, cfg);
  result.lambda_used = resolve_lambda(cfg, weights);
  result.widar = combine(result.idss.fscore, result.rouge_w, result.lambda_used);
  result.widar.zero_denominator = result.rouge_w.zero_denominator || result.idss.zero_denominator;
  return result;
}

WidarResult widar(const TextUnit& summary, const TextUnit& reference, const TextUnit& document,
                  const MetricConfig& cfg) {
  return widar(summary, reference, document, idss(summary, document), cfg);
}

WidarResult widar_multi(const TextUnit& summary, const std::vector<TextUnit>& references,
                        const TextUnit& document, const MetricConfig& cfg) {
  if (references.empty()) throw Error(ErrorKind::kNoReferences, "record has no references");
  const auto shared_idss = idss(summary, document);
  if (references.size() == 1) return widar(summary, references.front(), document, shared_idss, cfg);

  std::vector<WidarResult> per_ref;
  per_ref.reserve(references.size());
  for (const auto& reference : references) {
    per_ref.push_back(widar(summary, reference, document, shared_idss, cfg));
  }

  const bool use_max = cfg.multi_ref_agg == Aggregation::kMax;
  auto aggregate = [&](auto field) {
    double acc = use_max ? field(per_ref.front()) : 0.0;
    for (const auto& r : per_ref) acc = use_max ? std::max(acc, field(r)) : acc + field(r);
    return use_max ? acc : acc / static_cast<double>(per_ref.size());
  };
  auto aggregate_score = [&](auto member) {
    RougeScore s;
    s.recall = aggregate([&](const WidarResult& r) { return (r.*member).recall; });
    s.precision = aggregate([&](const WidarResult& r) { return (r.*member).precision; });
    s.fscore = aggregate([&](const WidarResult& r) { return (r.*member).fscore; });
    s.zero_denominator = std::any_of(per_ref.begin(), per_ref.end(),
                                     [&](const WidarResult& r) { return (r.*member).zero_denominator; });
    return s;
  };

  WidarResult result;
  result.idss = shared_idss;
  result.widar = aggregate_score(&WidarResult::widar);
  result.rouge_w = aggregate_score(&WidarResult::rouge_w);
  result.lambda_used = aggregate([](const WidarResult& r) { return r.lambda_used; });
  for (auto& r : per_ref) result.weights.push_back(std::move(r.weights.front()));
  return result;
}

}  // namespace widar
