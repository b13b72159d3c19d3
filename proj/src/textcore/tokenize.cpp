#include "paratask/textcore/text.hpp"

#include <unicode/uchar.h>
#include <unicode/utf8.h>

namespace paratask::textcore {
namespace {

struct CodePoint {
  UChar32 value;
  std::size_t begin;
  std::size_t end;
};

std::vector<CodePoint> decode(std::string_view text, std::size_t from, std::size_t to) {
  std::vector<CodePoint> cps;
  const auto* s = reinterpret_cast<const uint8_t*>(text.data());
  int32_t i = static_cast<int32_t>(from);
  const int32_t n = static_cast<int32_t>(to);
  while (i < n) {
    int32_t start = i;
    UChar32 c;
    U8_NEXT(s, i, n, c);
    if (c < 0) c = 0xFFFD;
    cps.push_back({c, static_cast<std::size_t>(start), static_cast<std::size_t>(i)});
  }
  return cps;
}

bool is_word_joiner(const std::vector<CodePoint>& cps, std::size_t i) {
  if (i == 0 || i + 1 >= cps.size()) return false;
  UChar32 c = cps[i].value;
  UChar32 prev = cps[i - 1].value;
  UChar32 next = cps[i + 1].value;
  if (c == '\'' || c == 0x2019 || c == '-') return u_isalnum(prev) && u_isalnum(next);
  if (c == '.' || c == ',') return u_isdigit(prev) && u_isdigit(next);
  return false;
}

void emit(TokenSequence& out, std::string_view text, std::size_t begin, std::size_t end) {
  if (begin >= end) return;
  out.tokens.push_back({to_lower(text.substr(begin, end - begin)), begin, end});
}

}  // namespace

std::vector<std::string> TokenSequence::forms() const {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) out.push_back(t.form);
  return out;
}

TokenSequence tokenize(std::string_view text) {
  TokenSequence out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && text[pos] == ' ') ++pos;
    std::size_t chunk_end = text.find(' ', pos);
    if (chunk_end == std::string_view::npos) chunk_end = text.size();
    if (pos >= chunk_end) break;

    auto cps = decode(text, pos, chunk_end);
    std::size_t word_begin = pos;
    for (std::size_t i = 0; i < cps.size(); ++i) {
      if (!u_ispunct(cps[i].value) || is_word_joiner(cps, i)) continue;
      emit(out, text, word_begin, cps[i].begin);
      emit(out, text, cps[i].begin, cps[i].end);
      word_begin = cps[i].end;
    }
    emit(out, text, word_begin, chunk_end);
    pos = chunk_end;
  }
  return out;
}

}  // namespace paratask::textcore
