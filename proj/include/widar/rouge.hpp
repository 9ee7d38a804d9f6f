#pragma once

// Classic ROUGE-N and ROUGE-L.

#include <cstddef>

#include "widar/text.hpp"

namespace widar {

struct RougeScore {
  double recall = 0.0;
  double precision = 0.0;
  double fscore = 0.0;
  // Set when a denominator was zero; the score components are then all zero.
  bool zero_denominator = false;

  bool operator==(const RougeScore&) const = default;
};

enum class Component { kRecall, kPrecision, kFscore };

double component(const RougeScore& score, Component c);

/// Harmonic mean, 0 when r + p == 0.
double harmonic_mean(double recall, double precision);

/// Builds a score from an overlap and its two denominators. A zero
/// denominator yields the flagged all-zero score.
RougeScore make_score(double overlap, double reference_total, double candidate_total);

/// Clipped n-gram overlap with n-grams taken per sentence.
RougeScore rouge_n(const TextUnit& candidate, const TextUnit& reference, std::size_t n);

/// Sentence-pair ROUGE-L; recall is the fraction of `reference` covered.
RougeScore rouge_l_pair(const TokenizedSentence& candidate, const TokenizedSentence& reference);

/// Summary-level ROUGE-L: sum over reference sentences of union_lcs against
/// the candidate, over token counts.
RougeScore rouge_l_summary(const TextUnit& candidate, const TextUnit& reference);

}  // namespace widar
