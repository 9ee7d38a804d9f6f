#pragma once

// Coverage and redundancy weights for reference sentences.

#include <span>
#include <vector>

#include "widar/text.hpp"

namespace widar {

struct WeightThresholds {
  double theta1 = 0.1;  // coverage
  double theta2 = 0.3;  // redundancy
};

struct SentenceWeights {
  std::vector<double> w_cov;
  std::vector<double> w_red;
  std::vector<double> w;  // combined, sums to |R| unless all-ones fallback
  bool fallback = false;
};

/// Which weight components feed the combination; the partial modes exist
/// for ablations.
enum class WeightMode { kFull, kCoverageOnly, kRedundancyOnly, kUniform };

/// Fraction of document sentences d_j with ROUGE-L recall of r_i against d_j
/// at or above theta1. Throws kEmptyDocument when the document is empty.
std::vector<double> coverage_weights(const TextUnit& reference, const TextUnit& document,
                                     double theta1);

/// 1 - (number of other reference sentences r_j with recall of r_i >= theta2) / |R|.
std::vector<double> redundancy_weights(const TextUnit& reference, double theta2);

/// Averages the two weights and rescales so they sum to |R|.
SentenceWeights combine_weights(std::span<const double> w_cov, std::span<const double> w_red,
                                WeightMode mode = WeightMode::kFull);

SentenceWeights compute_weights(const TextUnit& reference, const TextUnit& document,
                                const WeightThresholds& thresholds,
                                WeightMode mode = WeightMode::kFull);

}  // namespace widar
