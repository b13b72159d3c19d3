#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "paratask/common/matrix.hpp"
#include "paratask/evalkit/confusion.hpp"
#include "paratask/evalkit/kfold.hpp"
#include "paratask/forest/random_forest.hpp"

namespace paratask::evalkit {

struct FoldResult {
  std::size_t fold = 0;
  std::size_t train_size = 0;
  ConfusionStats stats;
};

struct CrossValidationResult {
  std::vector<FoldResult> folds;
  // Every sample is predicted once, by the model that did not see it.
  ConfusionStats pooled;
  double mean_micro_f1 = 0;
  std::vector<textcore::TaskLabel> predictions;  // indexed like the input
};

struct HoldoutResult {
  Holdout split;
  ConfusionStats stats;
  forest::ForestModel model;
};

// Fold assignment uses derive_seed(seed, "folds"); fold f's forest uses
// derive_seed(seed, "fold-<f>"). Folds run in order; `jobs` parallelises tree
// growth only, so the result is independent of it.
CrossValidationResult cross_validate(const FeatureMatrix& x, std::span<const textcore::TaskLabel> y,
                                     const std::string& schema_hash,
                                     const forest::ForestParams& params, std::size_t k,
                                     std::uint64_t seed, unsigned jobs = 1);

// 80:20 stratified split (derive_seed(seed, "folds")), forest seeded with
// derive_seed(seed, "holdout").
HoldoutResult holdout_evaluate(const FeatureMatrix& x, std::span<const textcore::TaskLabel> y,
                               const std::string& schema_hash, const forest::ForestParams& params,
                               std::uint64_t seed, unsigned jobs = 1);

FeatureMatrix select_rows(const FeatureMatrix& x, std::span<const std::size_t> rows);

}  // namespace paratask::evalkit
