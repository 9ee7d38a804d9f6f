#include "widar/rouge.hpp"

namespace widar {

double component(const RougeScore& score, Component c) {
  switch (c) {
    case Component::kRecall: return score.recall;
    case Component::kPrecision: return score.precision;
    case Component::kFscore: return score.fscore;
  }
  return score.fscore;
}

double harmonic_mean(double recall, double precision) {
  const double sum = recall + precision;
  return sum > 0.0 ? 2.0 * recall * precision / sum : 0.0;
}

RougeScore make_score(double overlap, double reference_total, double candidate_total) {
  RougeScore score;
  if (reference_total <= 0.0 || candidate_total <= 0.0) {
    score.zero_denominator = true;
    return score;
  }
  score.recall = overlap / reference_total;
  score.precision = overlap / candidate_total;
  score.fscore = harmonic_mean(score.recall, score.precision);
  return score;
}

RougeScore rouge_n(const TextUnit& candidate, const TextUnit& reference, std::size_t n) {
  const auto cand = ngrams(candidate, n);
  const auto ref = ngrams(reference, n);
  const auto overlap = clipped_overlap(cand, ref);
  return make_score(static_cast<double>(overlap), static_cast<double>(ref.total()),
                    static_cast<double>(cand.total()));
}

RougeScore rouge_l_pair(const TokenizedSentence& candidate, const TokenizedSentence& reference) {
  const auto lcs = static_cast<double>(lcs_len(candidate, reference));
  RougeScore score;
  score.recall = reference.empty() ? 0.0 : lcs / static_cast<double>(reference.size());
  score.precision = candidate.empty() ? 0.0 : lcs / static_cast<double>(candidate.size());
  score.fscore = harmonic_mean(score.recall, score.precision);
  return score;
}

RougeScore rouge_l_summary(const TextUnit& candidate, const TextUnit& reference) {
  std::size_t hits = 0;
  for (const auto& r : reference.sentences) hits += union_lcs(r, candidate);
  auto score = make_score(static_cast<double>(hits), static_cast<double>(reference.token_count()),
                          static_cast<double>(candidate.token_count()));
  if (score.precision > 1.0) {
    score.precision = 1.0;
    score.fscore = harmonic_mean(score.recall, score.precision);
  }
  return score;
}

}  // namespace widar
