#pragma once

#include <array>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "paratask/postag/pos_tag.hpp"
#include "paratask/postag/tagger.hpp"
#include "paratask/textcore/pair.hpp"

namespace paratask::featurize {

inline constexpr int kSchemaVersion = 1;
inline constexpr std::size_t kNumScalarFeatures = 4;
inline constexpr std::array<std::string_view, kNumScalarFeatures> kScalarFeatureNames = {
    "compression_ratio", "rouge1_f", "bleu_sym", "cosine_sim"};
inline constexpr std::size_t kDefaultMinCount = 5;

// Layout of a feature vector: the four similarity scores, then |freq_a - freq_b|
// for every vocabulary n-gram (orders 1..4, each order sorted), then
// (freq_a + freq_b) / 2 over the same slots.
class FeatureSchema {
 public:
  FeatureSchema() = default;
  FeatureSchema(std::array<std::vector<postag::PosNgram>, postag::kMaxNgramOrder> vocab,
                std::size_t min_count, std::string tagger_version, std::string provider_id);

  int version() const noexcept { return version_; }
  std::size_t min_count() const noexcept { return min_count_; }
  const std::string& tagger_version() const noexcept { return tagger_version_; }
  const std::string& provider_id() const noexcept { return provider_id_; }
  const std::string& hash() const noexcept { return hash_; }
  const std::vector<postag::PosNgram>& vocab(std::size_t order) const { return vocab_.at(order - 1); }

  std::size_t vocab_size() const noexcept;
  std::size_t width() const noexcept { return kNumScalarFeatures + 2 * vocab_size(); }

  // Index of `gram` among all vocabulary slots, or -1.
  long slot(const postag::PosNgram& gram) const;
  // Human-readable name of feature `index`, e.g. "diff:DET NOUN".
  std::string feature_name(std::size_t index) const;

  // Versioned line-oriented text; byte-identical for equal schemas.
  std::string serialize() const;
  static FeatureSchema deserialize(std::string_view text);
  void save(const std::filesystem::path& path) const;
  static FeatureSchema load(const std::filesystem::path& path);

  bool operator==(const FeatureSchema& other) const { return hash_ == other.hash_; }

 private:
  std::string body() const;

  int version_ = kSchemaVersion;
  std::array<std::vector<postag::PosNgram>, postag::kMaxNgramOrder> vocab_;
  std::size_t min_count_ = kDefaultMinCount;
  std::string tagger_version_;
  std::string provider_id_;
  std::string hash_;
  std::map<postag::PosNgram, std::size_t> slots_;
};

// Collects POS n-grams whose pair document frequency (a pair counts an n-gram
// once even if both texts or repeats contain it) reaches min_count.
// Throws EmptyCorpus.
FeatureSchema build_schema(std::span<const textcore::ParaphrasePair> pairs, std::size_t min_count,
                           const postag::Tagger& tagger, std::string provider_id);

}  // namespace paratask::featurize
