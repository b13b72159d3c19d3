#include "paratask/featurize/vectorize.hpp"

#include <cmath>
#include <exception>
#include <thread>

#include "paratask/common/error.hpp"

namespace paratask::featurize {

postag::PosNgramProfile text_profile(std::string_view text, const postag::Tagger& tagger) {
  auto tags = tagger.tag(textcore::tokenize(text));
  return postag::pos_ngram_profile(tags);
}

FeatureVector vectorize_pair(const FeatureSchema& schema, const textcore::ParaphrasePair& pair,
                             const embed::Embedding& embedding_a,
                             const embed::Embedding& embedding_b, const postag::Tagger& tagger) {
  if (embedding_a.provider != schema.provider_id() || embedding_b.provider != schema.provider_id()) {
    throw Error(ErrorCode::SchemaMismatch, "embeddings from '" + embedding_a.provider +
                                               "' but schema expects '" + schema.provider_id() +
                                               "'");
  }
  if (tagger.version() != schema.tagger_version()) {
    throw Error(ErrorCode::SchemaMismatch, "tagger '" + tagger.version() +
                                               "' differs from schema tagger '" +
                                               schema.tagger_version() + "'");
  }

  const auto tokens_a = textcore::tokenize(pair.text_a);
  const auto tokens_b = textcore::tokenize(pair.text_b);
  const auto forms_a = tokens_a.forms();
  const auto forms_b = tokens_b.forms();

  FeatureVector fv;
  fv.schema_hash = schema.hash();
  fv.values.assign(schema.width(), 0.0);
  fv.values[0] = simmetrics::compression_ratio(pair.text_a, pair.text_b);
  fv.values[1] = simmetrics::rouge1_f(forms_a, forms_b);
  fv.values[2] = simmetrics::bleu_sym(forms_a, forms_b);
  fv.values[3] = simmetrics::cosine_sim(embedding_a.values, embedding_b.values);

  const auto tags_a = tagger.tag(tokens_a);
  const auto tags_b = tagger.tag(tokens_b);
  const auto prof_a = postag::pos_ngram_profile(tags_a);
  const auto prof_b = postag::pos_ngram_profile(tags_b);

  // Frequencies of out-of-vocabulary n-grams are dropped, not renormalized.
  const std::size_t v = schema.vocab_size();
  std::vector<double> fa(v, 0.0), fb(v, 0.0);
  for (const auto* src : {&prof_a, &prof_b}) {
    auto& dst = src == &prof_a ? fa : fb;
    for (const auto& order : src->orders) {
      for (const auto& [gram, freq] : order) {
        long s = schema.slot(gram);
        if (s >= 0) dst[static_cast<std::size_t>(s)] = freq;
      }
    }
  }
  for (std::size_t i = 0; i < v; ++i) {
    fv.values[kNumScalarFeatures + i] = std::fabs(fa[i] - fb[i]);
    fv.values[kNumScalarFeatures + v + i] = (fa[i] + fb[i]) / 2.0;
  }
  return fv;
}

std::vector<FeatureVector> vectorize_pairs(const FeatureSchema& schema,
                                           std::span<const textcore::ParaphrasePair> pairs,
                                           const embed::EmbeddingProvider& provider,
                                           const postag::Tagger& tagger, unsigned jobs) {
  if (provider.id() != schema.provider_id()) {
    throw Error(ErrorCode::SchemaMismatch, "embedder '" + provider.id() +
                                               "' differs from schema embedder '" +
                                               schema.provider_id() + "'");
  }
  std::vector<std::string> texts;
  texts.reserve(pairs.size() * 2);
  for (const auto& p : pairs) {
    texts.push_back(p.text_a);
    texts.push_back(p.text_b);
  }
  const auto embeddings = provider.embed_texts(texts);
  if (embeddings.size() != texts.size())
    throw Error(ErrorCode::DimensionMismatch, "embedder returned the wrong number of vectors");

  std::vector<FeatureVector> out(pairs.size());
  std::vector<std::exception_ptr> errors(pairs.size());
  auto work = [&](std::size_t first, std::size_t stride) {
    for (std::size_t i = first; i < pairs.size(); i += stride) {
      try {
        out[i] = vectorize_pair(schema, pairs[i], embeddings[2 * i], embeddings[2 * i + 1], tagger);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(pairs.size())));
  if (n <= 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> threads;
    for (unsigned t = 0; t < n; ++t) threads.emplace_back(work, t, n);
  }
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (!errors[i]) continue;
    try {
      std::rethrow_exception(errors[i]);
    } catch (const Error& e) {
      throw Error(e.code(), "pair " + pairs[i].id + ": " + e.message());
    }
  }
  return out;
}

}  // namespace paratask::featurize
