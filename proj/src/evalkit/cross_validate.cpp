#include "paratask/evalkit/cross_validate.hpp"

#include <algorithm>

#include "paratask/common/error.hpp"
#include "paratask/forest/rng.hpp"

namespace paratask::evalkit {

using textcore::TaskLabel;

FeatureMatrix select_rows(const FeatureMatrix& x, std::span<const std::size_t> rows) {
  FeatureMatrix out(x.cols());
  out.reserve_rows(rows.size());
  for (auto r : rows) out.add_row(x.row(r));
  return out;
}

namespace {

std::vector<TaskLabel> select_labels(std::span<const TaskLabel> y, std::span<const std::size_t> rows) {
  std::vector<TaskLabel> out;
  out.reserve(rows.size());
  for (auto r : rows) out.push_back(y[r]);
  return out;
}

void check_inputs(const FeatureMatrix& x, std::span<const TaskLabel> y) {
  if (x.rows() == 0) throw Error(ErrorCode::EmptyTrainingSet, "no labeled feature vectors");
  if (x.rows() != y.size()) throw Error(ErrorCode::LengthMismatch, "vectors and labels differ in count");
}

}  // namespace

CrossValidationResult cross_validate(const FeatureMatrix& x, std::span<const TaskLabel> y,
                                     const std::string& schema_hash,
                                     const forest::ForestParams& params, std::size_t k,
                                     std::uint64_t seed, unsigned jobs) {
  check_inputs(x, y);
  const auto folds = stratified_kfold(y, k, forest::derive_seed(seed, "folds"));

  CrossValidationResult result;
  result.predictions.assign(y.size(), TaskLabel::Unknown);
  ConfusionMatrix pooled;
  double f1_sum = 0;
  for (std::size_t f = 0; f < k; ++f) {
    std::vector<std::size_t> train;
    for (std::size_t g = 0; g < k; ++g)
      if (g != f) train.insert(train.end(), folds[g].begin(), folds[g].end());
    std::sort(train.begin(), train.end());

    const auto train_y = select_labels(y, train);
    const auto model = forest::train_forest(select_rows(x, train), train_y, schema_hash, params,
                                            forest::derive_seed(seed, "fold-" + std::to_string(f)),
                                            jobs);
    const auto test_x = select_rows(x, folds[f]);
    const auto test_y = select_labels(y, folds[f]);
    const auto predicted = forest::predict_batch(model, test_x, schema_hash);
    for (std::size_t i = 0; i < folds[f].size(); ++i) {
      result.predictions[folds[f][i]] = predicted[i];
      pooled.add(test_y[i], predicted[i]);
    }
    auto stats = confusion_stats(test_y, predicted);
    f1_sum += stats.micro_f1;
    result.folds.push_back({f, train.size(), std::move(stats)});
  }
  result.pooled = stats_from_matrix(pooled);
  result.mean_micro_f1 = f1_sum / static_cast<double>(k);
  return result;
}

HoldoutResult holdout_evaluate(const FeatureMatrix& x, std::span<const TaskLabel> y,
                               const std::string& schema_hash, const forest::ForestParams& params,
                               std::uint64_t seed, unsigned jobs) {
  check_inputs(x, y);
  auto split = stratified_holdout(y, forest::derive_seed(seed, "folds"));
  const auto train_y = select_labels(y, split.train);
  auto model = forest::train_forest(select_rows(x, split.train), train_y, schema_hash, params,
                                    forest::derive_seed(seed, "holdout"), jobs);
  const auto predicted = forest::predict_batch(model, select_rows(x, split.test), schema_hash);
  auto stats = confusion_stats(select_labels(y, split.test), predicted);
  return {std::move(split), std::move(stats), std::move(model)};
}

}  // namespace paratask::evalkit
