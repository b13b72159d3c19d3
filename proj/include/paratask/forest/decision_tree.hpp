#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "paratask/common/matrix.hpp"
#include "paratask/forest/rng.hpp"
#include "paratask/textcore/task_label.hpp"

namespace paratask::forest {

using textcore::TaskLabel;
using ClassCounts = std::array<std::uint32_t, textcore::kNumTasks>;

// 1 - sum p_c^2; 0 for an empty histogram.
double gini(const ClassCounts& counts) noexcept;

// Lowest class code among the most frequent classes.
TaskLabel majority_class(const ClassCounts& counts) noexcept;

// Threshold between two consecutive distinct sorted values, lo < t < hi where
// representable. Samples with value <= threshold go left.
double split_threshold(double lo, double hi) noexcept;

// Array-encoded node. Leaves have feature == -1 and no children.
struct TreeNode {
  std::int32_t feature = -1;
  double threshold = 0.0;
  std::int32_t left = -1;
  std::int32_t right = -1;
  ClassCounts counts{};

  bool is_leaf() const noexcept { return feature < 0; }
  bool operator==(const TreeNode&) const = default;
};

struct TreeParams {
  std::size_t max_depth = 15;
  std::size_t min_samples_split = 2;
  // Features examined per node; 0 examines all of them.
  std::size_t features_per_split = 0;
};

struct Split {
  std::size_t feature = 0;
  double threshold = 0.0;
  ClassCounts left{};
  ClassCounts right{};
};

// Best Gini split of `samples` (row indices, repeats allowed) over `features`.
// Candidates are midpoints between consecutive distinct values; the winner has
// the lowest sample-weighted child impurity, ties going to the lowest feature
// index and then the lowest threshold. Impurities are compared exactly in
// integer arithmetic. nullopt when no feature takes two distinct values.
std::optional<Split> find_best_split(const FeatureMatrix& x, std::span<const TaskLabel> y,
                                     std::span<const std::uint32_t> samples,
                                     std::span<const std::size_t> features);

class DecisionTree {
 public:
  DecisionTree() = default;
  // Takes ownership of a node array; throws CorruptModel if it is not a valid
  // tree rooted at node 0.
  explicit DecisionTree(std::vector<TreeNode> nodes);

  // Greedy CART growth on `samples`. Stops at max_depth, below
  // min_samples_split, on a pure node, or when no split exists.
  static DecisionTree train(const FeatureMatrix& x, std::span<const TaskLabel> y,
                            std::span<const std::uint32_t> samples, const TreeParams& params,
                            Rng& rng);

  const std::vector<TreeNode>& nodes() const noexcept { return nodes_; }
  const TreeNode& leaf_for(std::span<const double> features) const;
  TaskLabel predict(std::span<const double> features) const;

  // Longest root-to-leaf path in edges.
  std::size_t depth() const;

  bool operator==(const DecisionTree&) const = default;

 private:
  std::vector<TreeNode> nodes_;
};

}  // namespace paratask::forest
