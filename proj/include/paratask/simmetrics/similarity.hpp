#pragma once

#include <span>
#include <string>
#include <string_view>

#include "paratask/textcore/pair.hpp"
#include "paratask/textcore/text.hpp"

namespace paratask::simmetrics {

// The four scalar similarity features of a pair.
struct SimilarityScores {
  double compression_ratio = 0;  // (0, 1]
  double rouge1_f = 0;           // [0, 1]
  double bleu_sym = 0;           // [0, 1]
  double cosine_sim = 0;         // [-1, 1]
};

// Shorter over longer character length. Throws EmptyText.
double compression_ratio(std::string_view normalized_a, std::string_view normalized_b);
double compression_ratio(const textcore::ParaphrasePair& pair);

// Clipped unigram-overlap F1. Throws EmptyText on an empty side.
double rouge1_f(std::span<const std::string> a, std::span<const std::string> b);
double rouge1_f(const textcore::ParaphrasePair& pair);

inline constexpr int kBleuMaxOrder = 4;

// Sentence BLEU of `candidate` against a single `reference`: uniform weights
// over orders 1..4, brevity penalty, add-one smoothing on orders >= 2 and a
// hard zero when no unigram matches.
double bleu(std::span<const std::string> candidate, std::span<const std::string> reference);

// Mean of both directions. Throws EmptyText on an empty side.
double bleu_sym(std::span<const std::string> a, std::span<const std::string> b);
double bleu_sym(const textcore::ParaphrasePair& pair);

// Clamped to [-1, 1]. Throws DimensionMismatch or ZeroVector.
double cosine_sim(std::span<const double> u, std::span<const double> v);

}  // namespace paratask::simmetrics
