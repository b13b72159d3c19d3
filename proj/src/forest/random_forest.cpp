#include "paratask/forest/random_forest.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "paratask/common/error.hpp"

namespace paratask::forest {

std::size_t resolved_features_per_split(const ForestParams& params, std::size_t width) noexcept {
  if (params.features_per_split != 0) return std::min(params.features_per_split, width);
  auto k = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(width))));
  while (k * k < width) ++k;  // guard against sqrt rounding low
  while (k > 1 && (k - 1) * (k - 1) >= width) --k;
  return std::max<std::size_t>(1, std::min(k, width));
}

ForestModel::ForestModel(std::vector<DecisionTree> trees, ForestParams params, std::uint64_t seed,
                         std::string schema_hash, std::size_t width)
    : trees_(std::move(trees)),
      params_(params),
      seed_(seed),
      schema_hash_(std::move(schema_hash)),
      width_(width) {
  if (trees_.empty()) throw Error(ErrorCode::InvalidArgument, "forest without trees");
  if (schema_hash_.empty()) throw Error(ErrorCode::InvalidArgument, "forest without schema hash");
}

std::array<std::uint32_t, textcore::kNumTasks> ForestModel::votes(
    std::span<const double> features) const {
  std::array<std::uint32_t, textcore::kNumTasks> v{};
  for (const auto& t : trees_) ++v[textcore::code(t.predict(features))];
  return v;
}

TaskLabel ForestModel::predict(std::span<const double> features) const {
  return majority_class(votes(features));
}

ForestModel train_forest(const FeatureMatrix& x, std::span<const TaskLabel> y,
                         std::string schema_hash, const ForestParams& params, std::uint64_t seed,
                         unsigned jobs) {
  if (x.rows() == 0) throw Error(ErrorCode::EmptyTrainingSet, "no training vectors");
  if (x.rows() != y.size()) {
    throw Error(ErrorCode::LengthMismatch, std::to_string(x.rows()) + " vectors but " +
                                               std::to_string(y.size()) + " labels");
  }
  if (x.rows() > UINT32_MAX) throw Error(ErrorCode::InvalidArgument, "too many training rows");
  for (auto label : y)
    if (textcore::code(label) >= textcore::kNumTasks)
      throw Error(ErrorCode::InvalidArgument, "training label outside the five tasks");
  if (params.num_trees == 0) throw Error(ErrorCode::InvalidArgument, "num_trees must be positive");
  if (params.min_samples_split < 2)
    throw Error(ErrorCode::InvalidArgument, "min_samples_split must be at least 2");

  TreeParams tp;
  tp.max_depth = params.max_depth;
  tp.min_samples_split = params.min_samples_split;
  tp.features_per_split = resolved_features_per_split(params, x.cols());

  const std::size_t n = x.rows();
  std::vector<DecisionTree> trees(params.num_trees);
  auto grow = [&](std::size_t t) {
    Rng rng(seed ^ static_cast<std::uint64_t>(t));
    std::vector<std::uint32_t> samples(n);
    if (params.bootstrap) {
      for (auto& s : samples) s = static_cast<std::uint32_t>(rng.below(n));
    } else {
      for (std::size_t i = 0; i < n; ++i) samples[i] = static_cast<std::uint32_t>(i);
    }
    trees[t] = DecisionTree::train(x, y, samples, tp, rng);
  };

  const unsigned workers =
      static_cast<unsigned>(std::max<std::size_t>(1, std::min<std::size_t>(jobs, params.num_trees)));
  if (workers == 1) {
    for (std::size_t t = 0; t < params.num_trees; ++t) grow(t);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
          for (std::size_t t; (t = next.fetch_add(1)) < params.num_trees;) {
            try {
              grow(t);
            } catch (...) {
              std::lock_guard lock(failure_mutex);
              if (!failure) failure = std::current_exception();
            }
          }
        });
      }
    }
    if (failure) std::rethrow_exception(failure);
  }
  return ForestModel(std::move(trees), params, seed, std::move(schema_hash), x.cols());
}

std::vector<TaskLabel> predict_batch(const ForestModel& model, const FeatureMatrix& x,
                                     std::string_view schema_hash) {
  if (schema_hash != model.schema_hash()) {
    throw Error(ErrorCode::SchemaMismatch, "features under schema " + std::string(schema_hash) +
                                               " but model trained under " + model.schema_hash());
  }
  if (x.rows() > 0 && x.cols() != model.width()) {
    throw Error(ErrorCode::SchemaMismatch, "feature width " + std::to_string(x.cols()) +
                                               ", model expects " + std::to_string(model.width()));
  }
  std::vector<TaskLabel> out;
  out.reserve(x.rows());
  for (std::size_t i = 0; i < x.rows(); ++i) out.push_back(model.predict(x.row(i)));
  return out;
}

}  // namespace paratask::forest
