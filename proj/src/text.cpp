#include "widar/text.hpp"

#include <algorithm>
#include <cstdint>

namespace widar {

namespace {

// Decodes one UTF-8 code point at raw[pos] and advances pos past it. Invalid
// or truncated sequences decode as the single lead byte.
char32_t next_code_point(std::string_view raw, std::size_t& pos, std::size_t& len) {
  const auto b0 = static_cast<unsigned char>(raw[pos]);
  std::size_t need = 0;
  char32_t cp = b0;
  if (b0 >= 0xF0 && b0 < 0xF8) {
    need = 3;
    cp = b0 & 0x07;
  } else if (b0 >= 0xE0 && b0 < 0xF0) {
    need = 2;
    cp = b0 & 0x0F;
  } else if (b0 >= 0xC0 && b0 < 0xE0) {
    need = 1;
    cp = b0 & 0x1F;
  }
  bool valid = pos + need < raw.size();
  for (std::size_t k = 1; valid && k <= need; ++k) {
    const auto b = static_cast<unsigned char>(raw[pos + k]);
    valid = (b & 0xC0) == 0x80;
    cp = (cp << 6) | (b & 0x3F);
  }
  if (!valid) {
    len = 1;
    ++pos;
    return b0;
  }
  len = need + 1;
  pos += len;
  return cp;
}

bool is_token_char(char32_t cp) {
  if (cp < 0x80) {
    return (cp >= '0' && cp <= '9') || (cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z');
  }
  // Latin-1 punctuation and spaces, General Punctuation, CJK punctuation,
  // fullwidth ASCII punctuation.
  if (cp >= 0x80 && cp <= 0xBF) return false;
  if (cp == 0xD7 || cp == 0xF7) return false;
  if (cp >= 0x2000 && cp <= 0x206F) return false;
  if (cp >= 0x3000 && cp <= 0x303F) return false;
  if (cp >= 0xFF01 && cp <= 0xFF0F) return false;
  if (cp == 0xFEFF) return false;
  return true;
}

bool is_ascii_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

}  // namespace

std::size_t TextUnit::token_count() const noexcept {
  std::size_t total = 0;
  for (const auto& s : sentences) total += s.size();
  return total;
}

std::size_t NGramMultiset::total() const noexcept {
  std::size_t sum = 0;
  for (const auto& [gram, count] : counts) sum += count;
  return sum;
}

void NGramMultiset::merge(const NGramMultiset& other) {
  for (const auto& [gram, count] : other.counts) counts[gram] += count;
}

TokenizedSentence tokenize_sentence(std::string_view raw) {
  TokenizedSentence out;
  std::string current;
  std::size_t pos = 0;
  while (pos < raw.size()) {
    const std::size_t start = pos;
    std::size_t len = 0;
    const char32_t cp = next_code_point(raw, pos, len);
    if (is_token_char(cp)) {
      if (cp < 0x80) {
        char c = static_cast<char>(cp);
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
        current.push_back(c);
      } else {
        current.append(raw.substr(start, len));
      }
    } else if (!current.empty()) {
      out.tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) out.tokens.push_back(std::move(current));
  return out;
}

TextUnit split_sentences(std::string_view raw) {
  TextUnit unit;
  std::size_t begin = 0;
  auto emit = [&](std::size_t end) {
    auto sentence = tokenize_sentence(raw.substr(begin, end - begin));
    if (!sentence.empty()) unit.sentences.push_back(std::move(sentence));
    begin = end;
  };
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const char c = raw[i];
    if (c != '.' && c != '!' && c != '?') continue;
    if (i + 1 == raw.size() || is_ascii_space(raw[i + 1])) emit(i + 1);
  }
  if (begin < raw.size()) emit(raw.size());
  return unit;
}

TextUnit from_sentences(std::span<const std::string> sentences) {
  TextUnit unit;
  for (const auto& s : sentences) {
    auto tokenized = tokenize_sentence(s);
    if (!tokenized.empty()) unit.sentences.push_back(std::move(tokenized));
  }
  return unit;
}

NGramMultiset ngrams(const TokenizedSentence& s, std::size_t n) {
  NGramMultiset out;
  out.order = n;
  if (n == 0 || s.size() < n) return out;
  for (std::size_t i = 0; i + n <= s.size(); ++i) {
    NGram gram(s.tokens.begin() + static_cast<std::ptrdiff_t>(i),
               s.tokens.begin() + static_cast<std::ptrdiff_t>(i + n));
    ++out.counts[std::move(gram)];
  }
  return out;
}

NGramMultiset ngrams(const TextUnit& unit, std::size_t n) {
  NGramMultiset out;
  out.order = n;
  for (const auto& s : unit.sentences) out.merge(ngrams(s, n));
  return out;
}

std::size_t clipped_overlap(const NGramMultiset& a, const NGramMultiset& b) {
  std::size_t overlap = 0;
  const auto& small = a.counts.size() <= b.counts.size() ? a.counts : b.counts;
  const auto& large = a.counts.size() <= b.counts.size() ? b.counts : a.counts;
  for (const auto& [gram, count] : small) {
    const auto it = large.find(gram);
    if (it != large.end()) overlap += std::min(count, it->second);
  }
  return overlap;
}

std::size_t lcs_len(std::span<const std::string> a, std::span<const std::string> b) {
  if (a.empty() || b.empty()) return 0;
  std::vector<std::uint32_t> prev(b.size() + 1, 0), cur(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      cur[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

std::size_t lcs_len(const TokenizedSentence& a, const TokenizedSentence& b) {
  return lcs_len(std::span<const std::string>(a.tokens), std::span<const std::string>(b.tokens));
}

std::vector<std::size_t> canonical_lcs_positions(std::span<const std::string> ref,
                                                 std::span<const std::string> cand) {
  const std::size_t m = ref.size(), n = cand.size();
  std::vector<std::size_t> positions;
  if (m == 0 || n == 0) return positions;
  // suffix[i][j] = LCS length of ref[i..] and cand[j..]
  const std::size_t stride = n + 1;
  std::vector<std::uint32_t> suffix((m + 1) * stride, 0);
  for (std::size_t i = m; i-- > 0;) {
    for (std::size_t j = n; j-- > 0;) {
      suffix[i * stride + j] = ref[i] == cand[j]
                                   ? suffix[(i + 1) * stride + j + 1] + 1
                                   : std::max(suffix[(i + 1) * stride + j], suffix[i * stride + j + 1]);
    }
  }
  // Walk forward keeping the reference index as small as possible: match when
  // tokens agree, otherwise prefer skipping a candidate token.
  std::size_t i = 0, j = 0;
  while (i < m && j < n) {
    if (ref[i] == cand[j]) {
      positions.push_back(i);
      ++i;
      ++j;
    } else if (suffix[i * stride + j + 1] == suffix[i * stride + j]) {
      ++j;
    } else {
      ++i;
    }
  }
  return positions;
}

std::size_t union_lcs(const TokenizedSentence& r, const TextUnit& summary) {
  if (r.empty()) return 0;
  std::vector<char> hit(r.size(), 0);
  for (const auto& s : summary.sentences) {
    for (std::size_t p : canonical_lcs_positions(r.tokens, s.tokens)) hit[p] = 1;
  }
  return static_cast<std::size_t>(std::count(hit.begin(), hit.end(), 1));
}

TokenizedSentence flatten(const TextUnit& unit) {
  TokenizedSentence out;
  out.tokens.reserve(unit.token_count());
  for (const auto& s : unit.sentences) {
    out.tokens.insert(out.tokens.end(), s.tokens.begin(), s.tokens.end());
  }
  return out;
}

}  // namespace widar
