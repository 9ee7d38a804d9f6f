#pragma once

// Tokenization, sentence splitting, n-gram extraction and LCS primitives.

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace widar {

struct TokenizedSentence {
  std::vector<std::string> tokens;

  std::size_t size() const noexcept { return tokens.size(); }
  bool empty() const noexcept { return tokens.empty(); }
  bool operator==(const TokenizedSentence&) const = default;
};

/// An ordered list of sentences: a document, a reference or a summary.
struct TextUnit {
  std::vector<TokenizedSentence> sentences;

  std::size_t size() const noexcept { return sentences.size(); }
  bool empty() const noexcept { return sentences.empty(); }
  std::size_t token_count() const noexcept;
  bool operator==(const TextUnit&) const = default;
};

using NGram = std::vector<std::string>;

/// Multiset of the n-grams of one sentence (or of several sentences with
/// n-grams taken per sentence).
struct NGramMultiset {
  std::size_t order = 1;
  std::map<NGram, std::size_t> counts;

  std::size_t total() const noexcept;
  void merge(const NGramMultiset& other);
};

/// Lowercases and splits on whitespace and any non-alphanumeric character.
/// Punctuation never survives as a token; digits are kept.
TokenizedSentence tokenize_sentence(std::string_view raw);

/// Naive splitter: a sentence ends at '.', '!' or '?' followed by whitespace
/// or end of input. Sentences with no tokens are dropped.
TextUnit split_sentences(std::string_view raw);

/// Builds a TextUnit from pre-split sentence strings, dropping empty ones.
TextUnit from_sentences(std::span<const std::string> sentences);

NGramMultiset ngrams(const TokenizedSentence& s, std::size_t n);

/// Per-sentence n-grams of every sentence, merged. No bridge n-grams.
NGramMultiset ngrams(const TextUnit& unit, std::size_t n);

/// Size of the clipped (multiset-min) intersection.
std::size_t clipped_overlap(const NGramMultiset& a, const NGramMultiset& b);

std::size_t lcs_len(std::span<const std::string> a, std::span<const std::string> b);
std::size_t lcs_len(const TokenizedSentence& a, const TokenizedSentence& b);

/// Reference positions of one canonical LCS of `ref` and `cand`: among all
/// maximum-length alignments, the lexicographically smallest sequence of
/// reference positions. Positions are returned ascending.
std::vector<std::size_t> canonical_lcs_positions(std::span<const std::string> ref,
                                                 std::span<const std::string> cand);

/// Number of distinct positions of `r` covered by the canonical LCS with any
/// sentence of `summary`.
std::size_t union_lcs(const TokenizedSentence& r, const TextUnit& summary);

/// All tokens of the unit in order, ignoring sentence boundaries.
TokenizedSentence flatten(const TextUnit& unit);

}  // namespace widar
