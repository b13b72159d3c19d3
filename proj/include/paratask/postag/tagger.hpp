#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "paratask/postag/pos_tag.hpp"
#include "paratask/textcore/text.hpp"

namespace paratask::postag {

// Any tagger producing one tag per token. version() identifies the tagger and
// its resources; it is folded into feature schema hashes.
class Tagger {
 public:
  virtual ~Tagger() = default;
  virtual std::vector<PosTag> tag(const textcore::TokenSequence& tokens) const = 0;
  virtual std::string version() const = 0;
};

struct SuffixRule {
  std::string suffix;
  PosTag tag = PosTag::NOUN;
  std::size_t min_stem = 1;  // characters left before the suffix
};

// Deterministic cascade: punctuation -> PUNCT, numeric -> NUM, closed-class
// lexicon, tokens without letters -> X, suffix rules, otherwise NOUN.
class CascadeTagger final : public Tagger {
 public:
  CascadeTagger(std::string_view lexicon_tsv, std::string_view suffix_rules_tsv);

  // Lexicon and rules compiled in from data/.
  static const CascadeTagger& bundled();
  static CascadeTagger from_files(const std::filesystem::path& lexicon,
                                  const std::filesystem::path& suffix_rules);

  std::vector<PosTag> tag(const textcore::TokenSequence& tokens) const override;
  std::string version() const override { return version_; }

  // Tags one lowercased token form.
  PosTag tag_form(std::string_view form) const;

  std::size_t lexicon_size() const noexcept { return lexicon_.size(); }

 private:
  std::unordered_map<std::string, PosTag> lexicon_;
  std::vector<SuffixRule> rules_;  // longest suffix first
  std::string version_;
};

}  // namespace paratask::postag
