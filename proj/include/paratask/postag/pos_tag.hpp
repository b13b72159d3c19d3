#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace paratask::postag {

// Coarse 12-tag universal-style tagset. Codes are stable.
enum class PosTag : std::uint8_t {
  NOUN = 0,
  VERB,
  ADJ,
  ADV,
  PRON,
  DET,
  ADP,
  NUM,
  CONJ,
  PRT,
  PUNCT,
  X,
};

inline constexpr std::size_t kNumPosTags = 12;

std::string_view pos_tag_name(PosTag tag) noexcept;
std::optional<PosTag> parse_pos_tag(std::string_view name) noexcept;

inline constexpr std::size_t kMaxNgramOrder = 4;

// A contiguous tag sequence of length 1..4. Unused slots stay NOUN so that the
// defaulted ordering is lexicographic by tag code within one order.
struct PosNgram {
  std::uint8_t order = 0;
  std::array<PosTag, kMaxNgramOrder> tags{};

  auto operator<=>(const PosNgram&) const = default;
  bool operator==(const PosNgram&) const = default;

  // Space-separated tag names, e.g. "DET NOUN".
  std::string to_string() const;
  static std::optional<PosNgram> parse(std::string_view text);
};

}  // namespace paratask::postag
