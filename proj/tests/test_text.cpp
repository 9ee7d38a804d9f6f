#include <random>

#include <gtest/gtest.h>

#include "support/generators.hpp"
#include "support/oracle.hpp"
#include "widar/text.hpp"

namespace widar {
namespace {

using Tokens = std::vector<std::string>;

TokenizedSentence sent(Tokens t) { return TokenizedSentence{std::move(t)}; }

TEST(Tokenize, LowercasesAndDropsPunctuation) {
  EXPECT_EQ(tokenize_sentence("The cat sat.").tokens, (Tokens{"the", "cat", "sat"}));
}

TEST(Tokenize, EmptyInput) {
  EXPECT_TRUE(tokenize_sentence("").empty());
  EXPECT_TRUE(tokenize_sentence(" \t\n ").empty());
  EXPECT_TRUE(tokenize_sentence("... !? --").empty());
}

TEST(Tokenize, ApostropheAndDigits) {
  // Golden: apostrophe is a boundary, digits stay inside their token.
  EXPECT_EQ(tokenize_sentence("Drone's 300ft limit!").tokens, (Tokens{"drone", "s", "300ft", "limit"}));
}

TEST(Tokenize, UnicodePunctuationAndLetters) {
  // U+2019 right quote and U+2014 em dash split; accented letters survive.
  EXPECT_EQ(tokenize_sentence("Drone\xE2\x80\x99s caf\xC3\xA9\xE2\x80\x94open").tokens,
            (Tokens{"drone", "s", "caf\xC3\xA9", "open"}));
  EXPECT_EQ(tokenize_sentence("a\xC2\xA0" "b").tokens, (Tokens{"a", "b"}));
}

TEST(Tokenize, NormalizationIsIdempotent) {
  std::mt19937_64 rng(3);
  const std::string alphabet = "aB3 .,'!?-\xC3\xA9Zz\t";
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1), len(0, 40);
  for (int trial = 0; trial < 500; ++trial) {
    std::string raw;
    for (std::size_t i = 0, n = len(rng); i < n; ++i) raw.push_back(alphabet[pick(rng)]);
    const auto once = tokenize_sentence(raw);
    for (const auto& t : once.tokens) {
      ASSERT_FALSE(t.empty());
      ASSERT_EQ(tokenize_sentence(t).tokens, Tokens{t}) << raw;
    }
    ASSERT_EQ(tokenize_sentence(raw), once);
  }
}

TEST(SplitSentences, Basic) {
  EXPECT_EQ(split_sentences("A b. C d.").size(), 2u);
  EXPECT_EQ(split_sentences("A b").size(), 1u);
  EXPECT_EQ(split_sentences("").size(), 0u);
  EXPECT_EQ(split_sentences("Wow!! Really? yes").size(), 3u);
}

TEST(SplitSentences, NaiveAbbreviationArtifact) {
  // Known limitation of the naive splitter: "Mr." ends a sentence.
  const auto unit = split_sentences("Mr. Smith went. He left.");
  ASSERT_EQ(unit.size(), 3u);
  EXPECT_EQ(unit.sentences[0].tokens, (Tokens{"mr"}));
  EXPECT_EQ(unit.sentences[1].tokens, (Tokens{"smith", "went"}));
  EXPECT_EQ(unit.sentences[2].tokens, (Tokens{"he", "left"}));
}

TEST(SplitSentences, DecimalPointDoesNotSplit) {
  EXPECT_EQ(split_sentences("It costs 3.5 dollars. Cheap.").size(), 2u);
}

TEST(SplitSentences, DropsEmptySentences) {
  EXPECT_EQ(split_sentences("... ! ? Hi.").size(), 1u);
}

TEST(NGrams, Examples) {
  const auto bi = ngrams(sent({"a", "b", "c"}), 2);
  EXPECT_EQ(bi.counts.size(), 2u);
  EXPECT_EQ(bi.counts.at({"a", "b"}), 1u);
  EXPECT_EQ(bi.counts.at({"b", "c"}), 1u);

  const auto rep = ngrams(sent({"a", "a", "a"}), 2);
  ASSERT_EQ(rep.counts.size(), 1u);
  EXPECT_EQ(rep.counts.at({"a", "a"}), 2u);

  EXPECT_TRUE(ngrams(sent({"a", "b"}), 3).counts.empty());
}

TEST(NGrams, TotalCountLaw) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const auto s = testing::random_sentence(rng, 0, 10, 3);
    for (std::size_t n = 1; n <= 4; ++n) {
      const auto g = ngrams(s, n);
      const std::size_t expected = s.size() >= n ? s.size() - n + 1 : 0;
      ASSERT_EQ(g.total(), expected);
      for (const auto& [gram, count] : g.counts) {
        ASSERT_EQ(gram.size(), n);
        ASSERT_GE(count, 1u);
      }
    }
  }
}

TEST(NGrams, UnitNeverFormsBridgeGrams) {
  TextUnit unit{{sent({"a", "b"}), sent({"c", "d"})}};
  const auto g = ngrams(unit, 2);
  EXPECT_EQ(g.total(), 2u);
  EXPECT_EQ(g.counts.count({"b", "c"}), 0u);
}

TEST(Lcs, Examples) {
  const Tokens a{"a", "b", "c", "d"}, b{"a", "c", "b", "d"};
  EXPECT_EQ(oracle::lcs_brute(a, b), 3u);
  EXPECT_EQ(lcs_len(sent(a), sent(b)), 3u);
  EXPECT_EQ(lcs_len(sent(a), sent(a)), 4u);
  EXPECT_EQ(lcs_len(sent({"a", "b"}), sent({"c", "d"})), 0u);
  EXPECT_EQ(lcs_len(sent({}), sent(a)), 0u);
}

TEST(Lcs, MatchesBruteForceAndLaws) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto a = testing::random_sentence(rng, 0, 8, 4);
    const auto b = testing::random_sentence(rng, 0, 8, 4);
    const auto l = lcs_len(a, b);
    ASSERT_EQ(l, oracle::lcs_brute(a.tokens, b.tokens));
    ASSERT_EQ(l, lcs_len(b, a));
    ASSERT_LE(l, std::min(a.size(), b.size()));
    ASSERT_EQ(lcs_len(a, a), a.size());
  }
}

TEST(CanonicalLcs, MatchesLexicographicBruteForce) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto r = testing::random_sentence(rng, 0, 8, 3);
    const auto s = testing::random_sentence(rng, 0, 8, 3);
    ASSERT_EQ(canonical_lcs_positions(r.tokens, s.tokens), oracle::canonical_positions_brute(r.tokens, s.tokens));
  }
}

TEST(CanonicalLcs, PrefersEarlierReferencePositions) {
  EXPECT_EQ(canonical_lcs_positions(Tokens{"x", "x"}, Tokens{"x"}), (std::vector<std::size_t>{0}));
  EXPECT_EQ(canonical_lcs_positions(Tokens{"a", "b", "a"}, Tokens{"b", "a"}), (std::vector<std::size_t>{1, 2}));
}

TEST(UnionLcs, WorkedExample) {
  const auto r = sent({"w1", "w2", "w3", "w4", "w5"});
  TextUnit summary{{sent({"w1", "w2", "w6", "w7", "w8"}), sent({"w1", "w3", "w8", "w9", "w5"})}};
  EXPECT_EQ(union_lcs(r, summary), 4u);
  EXPECT_EQ(oracle::union_lcs_brute(r.tokens, oracle::sentences_of(summary)), 4u);
}

TEST(UnionLcs, IdentityAndDisjoint) {
  const auto r = sent({"a", "b", "c"});
  EXPECT_EQ(union_lcs(r, TextUnit{{r}}), 3u);
  EXPECT_EQ(union_lcs(r, TextUnit{{sent({"x", "y"})}}), 0u);
  EXPECT_EQ(union_lcs(sent({}), TextUnit{{r}}), 0u);
}

TEST(UnionLcs, BoundsAndOracle) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto r = testing::random_sentence(rng, 1, 7, 4);
    const auto summary = testing::random_unit(rng, 3, 6, 4);
    const auto u = union_lcs(r, summary);
    std::size_t best = 0;
    for (const auto& s : summary.sentences) best = std::max(best, lcs_len(r, s));
    ASSERT_GE(u, best);
    ASSERT_LE(u, r.size());
    ASSERT_EQ(u, oracle::union_lcs_brute(r.tokens, oracle::sentences_of(summary)));
  }
}

}  // namespace
}  // namespace widar
