#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "paratask/common/matrix.hpp"
#include "paratask/forest/decision_tree.hpp"

namespace paratask::forest {

struct ForestParams {
  std::size_t num_trees = 100;
  std::size_t max_depth = 15;
  std::size_t min_samples_split = 2;
  // 0 selects ceil(sqrt(width)).
  std::size_t features_per_split = 0;
  bool bootstrap = true;

  bool operator==(const ForestParams&) const = default;
};

std::size_t resolved_features_per_split(const ForestParams& params, std::size_t width) noexcept;

class ForestModel {
 public:
  ForestModel() = default;
  ForestModel(std::vector<DecisionTree> trees, ForestParams params, std::uint64_t seed,
              std::string schema_hash, std::size_t width);

  const std::vector<DecisionTree>& trees() const noexcept { return trees_; }
  const ForestParams& params() const noexcept { return params_; }
  std::uint64_t seed() const noexcept { return seed_; }
  const std::string& schema_hash() const noexcept { return schema_hash_; }
  std::size_t width() const noexcept { return width_; }

  // Majority vote of the trees' leaf classes; ties go to the lowest code.
  TaskLabel predict(std::span<const double> features) const;
  std::array<std::uint32_t, textcore::kNumTasks> votes(std::span<const double> features) const;

  bool operator==(const ForestModel&) const = default;

 private:
  std::vector<DecisionTree> trees_;
  ForestParams params_;
  std::uint64_t seed_ = 0;
  std::string schema_hash_;
  std::size_t width_ = 0;
};

// Tree t is grown from Rng(seed ^ t): a bootstrap sample of n rows (when
// enabled), then per-node feature subsets from the same generator. Trees are
// distributed over `jobs` threads; the model does not depend on the schedule.
// Throws EmptyTrainingSet, LengthMismatch or InvalidArgument.
ForestModel train_forest(const FeatureMatrix& x, std::span<const TaskLabel> y,
                         std::string schema_hash, const ForestParams& params, std::uint64_t seed,
                         unsigned jobs = 1);

// Throws SchemaMismatch when `schema_hash` differs from the model's.
std::vector<TaskLabel> predict_batch(const ForestModel& model, const FeatureMatrix& x,
                                     std::string_view schema_hash);

}  // namespace paratask::forest
