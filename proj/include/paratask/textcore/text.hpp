#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace paratask::textcore {

// NFC, control characters removed, whitespace runs collapsed to one ASCII
// space, trimmed. Case is preserved. Invalid UTF-8 becomes U+FFFD.
std::string normalize(std::string_view text);

// Number of Unicode scalar values in UTF-8 text.
std::size_t char_length(std::string_view utf8);

// A token's lowercased form and its byte span [begin, end) in the source text.
struct Token {
  std::string form;
  std::size_t begin = 0;
  std::size_t end = 0;

  bool operator==(const Token&) const = default;
};

struct TokenSequence {
  std::vector<Token> tokens;

  std::size_t size() const noexcept { return tokens.size(); }
  bool empty() const noexcept { return tokens.empty(); }
  std::vector<std::string> forms() const;

  bool operator==(const TokenSequence&) const = default;
};

// Splits normalized text on spaces, then peels punctuation into single-character
// tokens. Apostrophes and hyphens between two letters or digits stay inside the
// word ("nation's", "well-known"); '.' and ',' between two digits stay inside
// numbers ("3.5", "1,000").
TokenSequence tokenize(std::string_view normalized_text);

// Unicode default lowercase of a whole string.
std::string to_lower(std::string_view utf8);

}  // namespace paratask::textcore
