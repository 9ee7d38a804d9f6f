#include "widar/meta_eval.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "widar/error.hpp"

namespace widar {

namespace {

void check_inputs(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw Error(ErrorKind::kLengthMismatch, "kendall_tau: sequences differ in length");
  }
  if (x.size() < 2) throw Error(ErrorKind::kInvalidArgument, "kendall_tau: need at least 2 items");
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (std::isnan(x[i]) || std::isnan(y[i])) {
      throw Error(ErrorKind::kInvalidArgument, "kendall_tau: NaN in input");
    }
  }
}

std::int64_t pairs_of(std::int64_t t) { return t * (t - 1) / 2; }

// Sums t(t-1)/2 over runs of equal adjacent elements under `eq`.
template <typename Eq>
std::int64_t tie_pairs(const std::vector<std::size_t>& order, Eq eq) {
  std::int64_t total = 0;
  std::int64_t run = 1;
  for (std::size_t k = 1; k < order.size(); ++k) {
    if (eq(order[k - 1], order[k])) {
      ++run;
    } else {
      total += pairs_of(run);
      run = 1;
    }
  }
  return total + pairs_of(run);
}

// Sorts `idx` by y and returns the number of strict inversions.
std::int64_t merge_count(std::vector<std::size_t>& idx, std::vector<std::size_t>& buf,
                         std::size_t lo, std::size_t hi, std::span<const double> y) {
  if (hi - lo < 2) return 0;
  const std::size_t mid = lo + (hi - lo) / 2;
  std::int64_t swaps = merge_count(idx, buf, lo, mid, y) + merge_count(idx, buf, mid, hi, y);
  std::size_t i = lo, j = mid, k = lo;
  while (i < mid && j < hi) {
    if (y[idx[j]] < y[idx[i]]) {
      swaps += static_cast<std::int64_t>(mid - i);
      buf[k++] = idx[j++];
    } else {
      buf[k++] = idx[i++];
    }
  }
  while (i < mid) buf[k++] = idx[i++];
  while (j < hi) buf[k++] = idx[j++];
  std::copy(buf.begin() + static_cast<std::ptrdiff_t>(lo), buf.begin() + static_cast<std::ptrdiff_t>(hi),
            idx.begin() + static_cast<std::ptrdiff_t>(lo));
  return swaps;
}

double tau_from_counts(const PairCounts& c, TauVariant variant) {
  const auto num = static_cast<double>(c.concordant - c.discordant);
  if (variant == TauVariant::kTiesExcluded) {
    const std::int64_t den = c.concordant + c.discordant;
    if (den == 0) throw Error(ErrorKind::kAllTied, "kendall_tau: no untied pairs");
    return num / static_cast<double>(den);
  }
  const std::int64_t untied = c.concordant + c.discordant;
  const auto den_x = static_cast<double>(untied + c.tied_y);
  const auto den_y = static_cast<double>(untied + c.tied_x);
  if (den_x == 0.0 || den_y == 0.0) throw Error(ErrorKind::kAllTied, "kendall_tau: a sequence is constant");
  return num / std::sqrt(den_x * den_y);
}

}  // namespace

const char* to_string(Dimension d) {
  switch (d) {
    case Dimension::kCoherence: return "coherence";
    case Dimension::kConsistency: return "consistency";
    case Dimension::kFluency: return "fluency";
    case Dimension::kRelevance: return "relevance";
  }
  return "unknown";
}

PairCounts count_pairs_naive(std::span<const double> x, std::span<const double> y) {
  check_inputs(x, y);
  PairCounts c;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      const double dx = x[i] - x[j];
      const double dy = y[i] - y[j];
      if (dx == 0.0 && dy == 0.0) {
        ++c.tied_both;
      } else if (dx == 0.0) {
        ++c.tied_x;
      } else if (dy == 0.0) {
        ++c.tied_y;
      } else if ((dx > 0.0) == (dy > 0.0)) {
        ++c.concordant;
      } else {
        ++c.discordant;
      }
    }
  }
  return c;
}

PairCounts count_pairs_fast(std::span<const double> x, std::span<const double> y) {
  check_inputs(x, y);
  const std::size_t n = x.size();
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return x[a] < x[b] || (x[a] == x[b] && y[a] < y[b]);
  });
  const std::int64_t tied_x_all = tie_pairs(idx, [&](std::size_t a, std::size_t b) { return x[a] == x[b]; });
  const std::int64_t tied_both =
      tie_pairs(idx, [&](std::size_t a, std::size_t b) { return x[a] == x[b] && y[a] == y[b]; });
  std::vector<std::size_t> buf(n);
  const std::int64_t swaps = merge_count(idx, buf, 0, n, y);
  const std::int64_t tied_y_all = tie_pairs(idx, [&](std::size_t a, std::size_t b) { return y[a] == y[b]; });

  PairCounts c;
  c.tied_both = tied_both;
  c.tied_x = tied_x_all - tied_both;
  c.tied_y = tied_y_all - tied_both;
  c.discordant = swaps;
  c.concordant = pairs_of(static_cast<std::int64_t>(n)) - tied_x_all - tied_y_all + tied_both - swaps;
  return c;
}

double kendall_tau(std::span<const double> x, std::span<const double> y, TauVariant variant) {
  return tau_from_counts(count_pairs_fast(x, y), variant);
}

double kendall_tau_naive(std::span<const double> x, std::span<const double> y, TauVariant variant) {
  return tau_from_counts(count_pairs_naive(x, y), variant);
}

namespace {

CorrelationReport correlate_group(const std::vector<double>& metric,
                                  const std::vector<const JudgmentRecord*>& human,
                                  TauVariant variant) {
  CorrelationReport report;
  report.n = metric.size();
  for (Dimension d : kDimensions) {
    std::vector<double> dim(human.size());
    for (std::size_t i = 0; i < human.size(); ++i) dim[i] = (*human[i])[d];
    report.tau[static_cast<std::size_t>(d)] = kendall_tau(metric, dim, variant);
  }
  report.average = (report.tau[0] + report.tau[1] + report.tau[2] + report.tau[3]) / 4.0;
  return report;
}

}  // namespace

CorrelationReport correlate(const std::string& metric, const ScoreMap& scores,
                            const JudgmentMap& judgments, const CorrelateOptions& options) {
  std::vector<std::string> missing;
  std::map<std::string, std::pair<std::vector<double>, std::vector<const JudgmentRecord*>>> groups;
  for (const auto& [id, value] : scores) {
    const auto it = judgments.find(id);
    if (it == judgments.end()) {
      missing.push_back(id);
      continue;
    }
    const std::string key = options.granularity == Granularity::kPerSystem ? it->second.system : "";
    auto& group = groups[key];
    group.first.push_back(value);
    group.second.push_back(&it->second);
  }
  if (!missing.empty()) {
    std::string msg = "no judgment for " + std::to_string(missing.size()) + " scored record(s):";
    for (std::size_t i = 0; i < missing.size() && i < 20; ++i) msg += " " + missing[i];
    if (missing.size() > 20) msg += " ...";
    throw Error(ErrorKind::kMissingJudgment, msg);
  }
  if (scores.size() < 2) throw Error(ErrorKind::kInvalidArgument, "correlate: need at least 2 records");

  CorrelationReport report;
  report.metric = metric;
  report.n = scores.size();
  if (options.granularity == Granularity::kPooled) {
    auto& [values, human] = groups.begin()->second;
    auto pooled = correlate_group(values, human, options.variant);
    pooled.metric = metric;
    return pooled;
  }

  // Per-system: average each dimension over the systems where tau is defined.
  std::array<double, 4> sum{};
  std::array<std::size_t, 4> used{};
  for (auto& [system, group] : groups) {
    auto& [values, human] = group;
    if (values.size() < 2) continue;
    for (Dimension d : kDimensions) {
      std::vector<double> dim(human.size());
      for (std::size_t i = 0; i < human.size(); ++i) dim[i] = (*human[i])[d];
      try {
        sum[static_cast<std::size_t>(d)] += kendall_tau(values, dim, options.variant);
        ++used[static_cast<std::size_t>(d)];
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::kAllTied) throw;
      }
    }
  }
  for (std::size_t k = 0; k < 4; ++k) {
    if (used[k] == 0) throw Error(ErrorKind::kAllTied, "correlate: no system with an untied pair");
    report.tau[k] = sum[k] / static_cast<double>(used[k]);
  }
  report.average = (report.tau[0] + report.tau[1] + report.tau[2] + report.tau[3]) / 4.0;
  return report;
}

DimensionMatrix judgment_intercorrelation(const JudgmentMap& judgments, TauVariant variant) {
  if (judgments.size() < 2) {
    throw Error(ErrorKind::kInvalidArgument, "intercorrelation: need at least 2 records");
  }
  std::array<std::vector<double>, 4> columns;
  for (const auto& [id, j] : judgments) {
    for (Dimension d : kDimensions) columns[static_cast<std::size_t>(d)].push_back(j[d]);
  }
  DimensionMatrix m{};
  for (std::size_t a = 0; a < 4; ++a) {
    m[a][a] = 1.0;
    for (std::size_t b = a + 1; b < 4; ++b) {
      m[a][b] = m[b][a] = kendall_tau(columns[a], columns[b], variant);
    }
  }
  return m;
}

std::vector<std::size_t> rank_descending(std::span<const double> values) {
  std::vector<std::size_t> ranks(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    std::size_t better = 0;
    for (double v : values) {
      if (v > values[i]) ++better;
    }
    ranks[i] = better + 1;
  }
  return ranks;
}

}  // namespace widar
