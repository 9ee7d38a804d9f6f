#pragma once

// Sentence-level and weighted ROUGE, input-document similarity, and the
// final WIDAR combination.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "widar/rouge.hpp"
#include "widar/text.hpp"
#include "widar/weighting.hpp"

namespace widar {

enum class Variant { kRouge1, kRouge2, kRougeL };
enum class LambdaStrategy { kFixed, kMaxCoverage, kMeanCoverage };
enum class Aggregation { kMean, kMax };

struct MetricConfig {
  Variant variant = Variant::kRougeL;
  Component component = Component::kFscore;
  double lambda = 0.5;
  LambdaStrategy lambda_strategy = LambdaStrategy::kFixed;
  WeightThresholds thresholds{};
  Aggregation multi_ref_agg = Aggregation::kMean;
  bool sentence_count_denominators = false;
  WeightMode weight_mode = WeightMode::kFull;

  /// Throws kInvalidArgument when a fraction is out of [0,1].
  void validate() const;
  /// Canonical single-line text form; identical configs give identical text.
  std::string canonical() const;
  /// 16 hex digits of FNV-1a over canonical().
  std::string fingerprint() const;
  /// "WIDAR_L", "WIDAR_1", ...
  std::string metric_name() const;
};

std::string to_string(Variant v);
std::string to_string(Component c);
std::string to_string(LambdaStrategy s);
std::string to_string(Aggregation a);
std::string to_string(WeightMode m);

struct WidarResult {
  RougeScore widar;
  RougeScore rouge_w;
  RougeScore idss;
  std::vector<SentenceWeights> weights;  // one entry per reference
  double lambda_used = 0.0;
};

/// Sentence-level ROUGE-N. Bridge n-grams spanning two sentences are never
/// formed. With weights, each reference sentence's share of the clipped
/// matches and of the recall denominator is scaled by its weight.
RougeScore rouge_n_sl(const TextUnit& summary, const TextUnit& reference, std::size_t n,
                      const SentenceWeights* weights = nullptr);

/// Sentence-level ROUGE-L built on union_lcs per reference sentence.
RougeScore rouge_l_sl(const TextUnit& summary, const TextUnit& reference,
                      const SentenceWeights* weights = nullptr, bool literal_denominators = false);

/// ROUGE-L between the summary and its input document; fscore is the IDSS.
RougeScore idss(const TextUnit& summary, const TextUnit& document);

/// Weighted ROUGE of the configured variant.
RougeScore rouge_w(const TextUnit& summary, const TextUnit& reference,
                   const SentenceWeights& weights, const MetricConfig& cfg);

double resolve_lambda(const MetricConfig& cfg, const SentenceWeights& weights);

/// (1 - lambda) * idss_f + lambda * weighted, per component.
RougeScore combine(double idss_f, const RougeScore& weighted, double lambda);

/// Single-reference WIDAR.
WidarResult widar(const TextUnit& summary, const TextUnit& reference, const TextUnit& document,
                  const MetricConfig& cfg);

/// Same, with an IDSS computed by the caller.
WidarResult widar(const TextUnit& summary, const TextUnit& reference, const TextUnit& document,
                  const RougeScore& precomputed_idss, const MetricConfig& cfg);

/// WIDAR against every reference, aggregated per component. IDSS is computed
/// once. Throws kNoReferences on an empty list.
WidarResult widar_multi(const TextUnit& summary, const std::vector<TextUnit>& references,
                        const TextUnit& document, const MetricConfig& cfg);

}  // namespace widar
