#include "paratask/postag/pos_tag.hpp"

namespace paratask::postag {
namespace {

constexpr std::array<std::string_view, kNumPosTags> kNames = {
    "NOUN", "VERB", "ADJ", "ADV", "PRON", "DET",
    "ADP",  "NUM",  "CONJ", "PRT", "PUNCT", "X"};

}  // namespace

std::string_view pos_tag_name(PosTag tag) noexcept {
  return kNames[static_cast<std::size_t>(tag)];
}

std::optional<PosTag> parse_pos_tag(std::string_view name) noexcept {
  for (std::size_t i = 0; i < kNames.size(); ++i)
    if (kNames[i] == name) return static_cast<PosTag>(i);
  return std::nullopt;
}

std::string PosNgram::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < order; ++i) {
    if (i) out.push_back(' ');
    out += pos_tag_name(tags[i]);
  }
  return out;
}

std::optional<PosNgram> PosNgram::parse(std::string_view text) {
  PosNgram g;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t sp = text.find(' ', start);
    if (sp == std::string_view::npos) sp = text.size();
    auto tag = parse_pos_tag(text.substr(start, sp - start));
    if (!tag || g.order == kMaxNgramOrder) return std::nullopt;
    g.tags[g.order++] = *tag;
    start = sp + 1;
  }
  if (g.order == 0) return std::nullopt;
  return g;
}

}  // namespace paratask::postag
