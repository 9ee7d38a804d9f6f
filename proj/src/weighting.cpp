#include "widar/weighting.hpp"

#include <string>

#include "widar/error.hpp"
#include "widar/rouge.hpp"

namespace widar {

namespace {

void check_threshold(double theta, const char* name) {
  if (!(theta >= 0.0 && theta <= 1.0)) {
    throw Error(ErrorKind::kInvalidArgument, std::string(name) + " must lie in [0,1]");
  }
}

}  // namespace

std::vector<double> coverage_weights(const TextUnit& reference, const TextUnit& document,
                                     double theta1) {
  check_threshold(theta1, "theta1");
  if (document.empty()) throw Error(ErrorKind::kEmptyDocument, "document has no sentences");
  if (reference.empty()) throw Error(ErrorKind::kEmptyInput, "reference has no sentences");
  std::vector<double> out;
  out.reserve(reference.size());
  const auto doc_size = static_cast<double>(document.size());
  for (const auto& r : reference.sentences) {
    std::size_t hits = 0;
    for (const auto& d : document.sentences) {
      if (rouge_l_pair(d, r).recall >= theta1) ++hits;
    }
    out.push_back(static_cast<double>(hits) / doc_size);
  }
  return out;
}

std::vector<double> redundancy_weights(const TextUnit& reference, double theta2) {
  check_threshold(theta2, "theta2");
  if (reference.empty()) throw Error(ErrorKind::kEmptyInput, "reference has no sentences");
  const std::size_t n = reference.size();
  std::vector<double> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t similar = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i && rouge_l_pair(reference.sentences[j], reference.sentences[i]).recall >= theta2) {
        ++similar;
      }
    }
    out.push_back(1.0 - static_cast<double>(similar) / static_cast<double>(n));
  }
  return out;
}

SentenceWeights combine_weights(std::span<const double> w_cov, std::span<const double> w_red,
                                WeightMode mode) {
  if (w_cov.size() != w_red.size()) {
    throw Error(ErrorKind::kLengthMismatch, "coverage and redundancy weights differ in length");
  }
  if (w_cov.empty()) throw Error(ErrorKind::kEmptyInput, "no reference sentences to weight");
  SentenceWeights out;
  out.w_cov.assign(w_cov.begin(), w_cov.end());
  out.w_red.assign(w_red.begin(), w_red.end());

  const std::size_t n = w_cov.size();
  std::vector<double> raw(n);
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    switch (mode) {
      case WeightMode::kFull: raw[i] = (w_cov[i] + w_red[i]) / 2.0; break;
      case WeightMode::kCoverageOnly: raw[i] = w_cov[i]; break;
      case WeightMode::kRedundancyOnly: raw[i] = w_red[i]; break;
      case WeightMode::kUniform: raw[i] = 1.0; break;
    }
    total += raw[i];
  }
  out.w.resize(n);
  if (total <= 0.0) {
    out.fallback = true;
    std::fill(out.w.begin(), out.w.end(), 1.0);
    return out;
  }
  const double scale = static_cast<double>(n) / total;
  for (std::size_t i = 0; i < n; ++i) out.w[i] = raw[i] * scale;
  return out;
}

SentenceWeights compute_weights(const TextUnit& reference, const TextUnit& document,
                                const WeightThresholds& thresholds, WeightMode mode) {
  const auto cov = coverage_weights(reference, document, thresholds.theta1);
  const auto red = redundancy_weights(reference, thresholds.theta2);
  return combine_weights(cov, red, mode);
}

}  // namespace widar
