#include "paratask/forest/decision_tree.hpp"

#include <algorithm>
#include <numeric>

#include "paratask/common/error.hpp"

namespace paratask::forest {
namespace {

__extension__ typedef unsigned __int128 u128;

std::uint64_t sum_squares(const ClassCounts& c) {
  std::uint64_t s = 0;
  for (auto v : c) s += static_cast<std::uint64_t>(v) * v;
  return s;
}

ClassCounts count_classes(std::span<const TaskLabel> y, std::span<const std::uint32_t> samples) {
  ClassCounts c{};
  for (auto i : samples) ++c[textcore::code(y[i])];
  return c;
}

bool is_pure(const ClassCounts& c) {
  return std::count_if(c.begin(), c.end(), [](std::uint32_t v) { return v > 0; }) <= 1;
}

class Builder {
 public:
  Builder(const FeatureMatrix& x, std::span<const TaskLabel> y, const TreeParams& params, Rng& rng)
      : x_(x), y_(y), params_(params), rng_(rng), pool_(x.cols()) {}

  std::int32_t grow(std::vector<std::uint32_t> samples, std::size_t depth) {
    const auto index = static_cast<std::int32_t>(nodes_.size());
    nodes_.emplace_back();
    nodes_.back().counts = count_classes(y_, samples);

    if (depth >= params_.max_depth || samples.size() < params_.min_samples_split ||
        is_pure(nodes_.back().counts)) {
      return index;
    }
    auto split = find_best_split(x_, y_, samples, candidate_features());
    if (!split) return index;

    std::vector<std::uint32_t> left, right;
    left.reserve(samples.size());
    right.reserve(samples.size());
    for (auto i : samples) (x_.at(i, split->feature) <= split->threshold ? left : right).push_back(i);
    samples.clear();
    samples.shrink_to_fit();

    const auto l = grow(std::move(left), depth + 1);
    const auto r = grow(std::move(right), depth + 1);
    auto& node = nodes_[static_cast<std::size_t>(index)];
    node.feature = static_cast<std::int32_t>(split->feature);
    node.threshold = split->threshold;
    node.left = l;
    node.right = r;
    return index;
  }

  std::vector<TreeNode> take() { return std::move(nodes_); }

 private:
  std::span<const std::size_t> candidate_features() {
    const std::size_t width = x_.cols();
    const std::size_t k = params_.features_per_split;
    std::iota(pool_.begin(), pool_.end(), std::size_t{0});
    if (k == 0 || k >= width) return pool_;
    // Partial Fisher-Yates: the first k slots become a uniform sample.
    for (std::size_t i = 0; i < k; ++i) {
      const auto j = i + static_cast<std::size_t>(rng_.below(width - i));
      std::swap(pool_[i], pool_[j]);
    }
    std::sort(pool_.begin(), pool_.begin() + static_cast<std::ptrdiff_t>(k));
    return std::span<const std::size_t>(pool_).first(k);
  }

  const FeatureMatrix& x_;
  std::span<const TaskLabel> y_;
  const TreeParams& params_;
  Rng& rng_;
  std::vector<std::size_t> pool_;
  std::vector<TreeNode> nodes_;
};

}  // namespace

double gini(const ClassCounts& counts) noexcept {
  std::uint64_t n = 0;
  for (auto c : counts) n += c;
  if (n == 0) return 0.0;
  double s = 0.0;
  for (auto c : counts) {
    const double p = static_cast<double>(c) / static_cast<double>(n);
    s += p * p;
  }
  return 1.0 - s;
}

TaskLabel majority_class(const ClassCounts& counts) noexcept {
  std::size_t best = 0;
  for (std::size_t c = 1; c < counts.size(); ++c)
    if (counts[c] > counts[best]) best = c;
  return static_cast<TaskLabel>(best);
}

double split_threshold(double lo, double hi) noexcept {
  double mid = 0.5 * lo + 0.5 * hi;
  if (!(mid < hi) || mid < lo) mid = lo;
  return mid;
}

std::optional<Split> find_best_split(const FeatureMatrix& x, std::span<const TaskLabel> y,
                                     std::span<const std::uint32_t> samples,
                                     std::span<const std::size_t> features) {
  const std::size_t n = samples.size();
  if (n < 2) return std::nullopt;
  const ClassCounts total = count_classes(y, samples);
  const std::uint64_t total_sq = sum_squares(total);

  // Minimising the weighted child Gini is maximising
  // S_l / n_l + S_r / n_r  (S = sum of squared class counts), compared as
  // the exact fraction (S_l * n_r + S_r * n_l) / (n_l * n_r).
  std::optional<Split> best;
  u128 best_num = 0, best_den = 1;

  std::vector<std::pair<double, std::uint8_t>> column(n);
  for (std::size_t f : features) {
    for (std::size_t k = 0; k < n; ++k)
      column[k] = {x.at(samples[k], f), static_cast<std::uint8_t>(textcore::code(y[samples[k]]))};
    std::sort(column.begin(), column.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    if (column.front().first == column.back().first) continue;

    ClassCounts left{};
    ClassCounts right = total;
    std::uint64_t s_left = 0, s_right = total_sq;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      const auto c = column[k].second;
      s_left += 2ULL * left[c] + 1;
      s_right -= 2ULL * right[c] - 1;
      ++left[c];
      --right[c];
      if (column[k].first == column[k + 1].first) continue;

      const std::uint64_t nl = k + 1, nr = n - nl;
      const u128 num = static_cast<u128>(s_left) * nr + static_cast<u128>(s_right) * nl;
      const u128 den = static_cast<u128>(nl) * nr;
      if (!best || num * best_den > best_num * den) {
        best_num = num;
        best_den = den;
        best = Split{f, split_threshold(column[k].first, column[k + 1].first), left, right};
      }
    }
  }
  return best;
}

DecisionTree::DecisionTree(std::vector<TreeNode> nodes) : nodes_(std::move(nodes)) {
  if (nodes_.empty()) throw Error(ErrorCode::CorruptModel, "tree without nodes");
  // Every non-root node must be referenced exactly once, by an earlier node.
  std::vector<int> refs(nodes_.size(), 0);
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const auto& n = nodes_[i];
    if (n.is_leaf()) {
      if (n.left != -1 || n.right != -1) throw Error(ErrorCode::CorruptModel, "leaf with children");
      std::uint64_t total = 0;
      for (auto c : n.counts) total += c;
      if (total == 0) throw Error(ErrorCode::CorruptModel, "leaf with an empty histogram");
      continue;
    }
    for (auto child : {n.left, n.right}) {
      if (child <= static_cast<std::int32_t>(i) || child >= static_cast<std::int32_t>(nodes_.size()))
        throw Error(ErrorCode::CorruptModel, "child index out of order");
      ++refs[static_cast<std::size_t>(child)];
    }
  }
  for (std::size_t i = 1; i < refs.size(); ++i)
    if (refs[i] != 1) throw Error(ErrorCode::CorruptModel, "node not referenced exactly once");
}

DecisionTree DecisionTree::train(const FeatureMatrix& x, std::span<const TaskLabel> y,
                                 std::span<const std::uint32_t> samples, const TreeParams& params,
                                 Rng& rng) {
  if (samples.empty()) throw Error(ErrorCode::EmptyTrainingSet, "tree without samples");
  Builder b(x, y, params, rng);
  b.grow(std::vector<std::uint32_t>(samples.begin(), samples.end()), 0);
  DecisionTree t;
  t.nodes_ = b.take();
  return t;
}

const TreeNode& DecisionTree::leaf_for(std::span<const double> features) const {
  const TreeNode* node = &nodes_.front();
  while (!node->is_leaf()) {
    const auto next = features[static_cast<std::size_t>(node->feature)] <= node->threshold
                          ? node->left
                          : node->right;
    node = &nodes_[static_cast<std::size_t>(next)];
  }
  return *node;
}

TaskLabel DecisionTree::predict(std::span<const double> features) const {
  return majority_class(leaf_for(features).counts);
}

std::size_t DecisionTree::depth() const {
  std::vector<std::size_t> d(nodes_.size(), 0);
  std::size_t deepest = 0;
  // Children always follow their parent in the array.
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    deepest = std::max(deepest, d[i]);
    const auto& n = nodes_[i];
    if (n.is_leaf()) continue;
    d[static_cast<std::size_t>(n.left)] = d[i] + 1;
    d[static_cast<std::size_t>(n.right)] = d[i] + 1;
  }
  return deepest;
}

}  // namespace paratask::forest
