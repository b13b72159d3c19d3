#pragma once

#include <span>
#include <string>
#include <vector>

#include "paratask/embed/provider.hpp"
#include "paratask/featurize/schema.hpp"
#include "paratask/postag/ngram_profile.hpp"
#include "paratask/postag/tagger.hpp"
#include "paratask/simmetrics/similarity.hpp"
#include "paratask/textcore/pair.hpp"

namespace paratask::featurize {

struct FeatureVector {
  std::vector<double> values;
  std::string schema_hash;

  bool operator==(const FeatureVector&) const = default;
};

// Tag profile of one normalized text.
postag::PosNgramProfile text_profile(std::string_view text, const postag::Tagger& tagger);

// Builds the feature vector of `pair` from precomputed embeddings of both texts.
// Throws SchemaMismatch when the embeddings come from a provider other than the
// schema's, EmptyText for an empty side.
FeatureVector vectorize_pair(const FeatureSchema& schema, const textcore::ParaphrasePair& pair,
                             const embed::Embedding& embedding_a,
                             const embed::Embedding& embedding_b, const postag::Tagger& tagger);

// Embeds and vectorizes many pairs. Texts are embedded in one provider call;
// the per-pair work is split over `jobs` threads with results in input order.
std::vector<FeatureVector> vectorize_pairs(const FeatureSchema& schema,
                                           std::span<const textcore::ParaphrasePair> pairs,
                                           const embed::EmbeddingProvider& provider,
                                           const postag::Tagger& tagger, unsigned jobs = 1);

}  // namespace paratask::featurize
