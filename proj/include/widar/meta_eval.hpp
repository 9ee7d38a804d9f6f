#pragma once

// Kendall's tau meta-evaluation of metric scores against human judgments.

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace widar {

enum class Dimension { kCoherence = 0, kConsistency = 1, kFluency = 2, kRelevance = 3 };
inline constexpr std::array<Dimension, 4> kDimensions = {
    Dimension::kCoherence, Dimension::kConsistency, Dimension::kFluency, Dimension::kRelevance};
const char* to_string(Dimension d);

/// Mean expert scores for one summary, each on the 1-5 scale.
struct JudgmentRecord {
  std::string record_id;
  std::array<double, 4> scores{};  // indexed by Dimension
  std::string system;              // optional system (model) id

  double operator[](Dimension d) const { return scores[static_cast<std::size_t>(d)]; }
  double& operator[](Dimension d) { return scores[static_cast<std::size_t>(d)]; }
  bool operator==(const JudgmentRecord&) const = default;
};

/// Concordant / discordant pair counts plus tie counts.
struct PairCounts {
  std::int64_t concordant = 0;
  std::int64_t discordant = 0;
  std::int64_t tied_x = 0;     // tied in x only
  std::int64_t tied_y = 0;     // tied in y only
  std::int64_t tied_both = 0;  // tied in both
};

/// O(n^2) enumeration over all unordered pairs. Kept as the reference path.
PairCounts count_pairs_naive(std::span<const double> x, std::span<const double> y);
/// O(n log n) via sort + merge-sort inversion count.
PairCounts count_pairs_fast(std::span<const double> x, std::span<const double> y);

enum class TauVariant {
  kTiesExcluded,  // (C - D) / (C + D), ties contribute to neither count
  kTauB,
};

/// Throws kLengthMismatch, kInvalidArgument (n < 2) or kAllTied.
double kendall_tau(std::span<const double> x, std::span<const double> y,
                   TauVariant variant = TauVariant::kTiesExcluded);
double kendall_tau_naive(std::span<const double> x, std::span<const double> y,
                         TauVariant variant = TauVariant::kTiesExcluded);

struct CorrelationReport {
  std::string metric;
  std::array<double, 4> tau{};
  double average = 0.0;
  std::size_t n = 0;

  double operator[](Dimension d) const { return tau[static_cast<std::size_t>(d)]; }
};

enum class Granularity {
  kPooled,     // one tau over all records
  kPerSystem,  // tau within each system, averaged over systems
};

struct CorrelateOptions {
  TauVariant variant = TauVariant::kTiesExcluded;
  Granularity granularity = Granularity::kPooled;
};

using ScoreMap = std::map<std::string, double>;
using JudgmentMap = std::map<std::string, JudgmentRecord>;

/// Joins scores and judgments on record id. Throws kMissingJudgment listing
/// every scored id without a judgment.
CorrelationReport correlate(const std::string& metric, const ScoreMap& scores,
                            const JudgmentMap& judgments, const CorrelateOptions& options = {});

/// 4x4 tau matrix between human dimensions.
using DimensionMatrix = std::array<std::array<double, 4>, 4>;
DimensionMatrix judgment_intercorrelation(const JudgmentMap& judgments,
                                          TauVariant variant = TauVariant::kTiesExcluded);

/// Ranks (1 = best, ties share the better rank) of `values`, descending.
std::vector<std::size_t> rank_descending(std::span<const double> values);

}  // namespace widar
