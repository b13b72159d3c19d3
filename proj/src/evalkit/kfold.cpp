#include "paratask/evalkit/kfold.hpp"

#include <algorithm>

#include "paratask/common/error.hpp"
#include "paratask/forest/rng.hpp"

namespace paratask::evalkit {

std::vector<Fold> stratified_kfold(std::span<const textcore::TaskLabel> labels, std::size_t k,
                                   std::uint64_t seed) {
  if (k < 2) throw Error(ErrorCode::InvalidArgument, "k-fold needs k >= 2");
  std::vector<std::vector<std::size_t>> by_class(textcore::kNumTasks + 1);
  for (std::size_t i = 0; i < labels.size(); ++i) by_class.at(textcore::code(labels[i])).push_back(i);

  for (std::size_t c = 0; c < by_class.size(); ++c) {
    const auto n = by_class[c].size();
    if (n > 0 && n < k) {
      throw Error(ErrorCode::TooFewSamples,
                  std::string(textcore::task_name(static_cast<textcore::TaskLabel>(c))) + " has " +
                      std::to_string(n) + " samples, fewer than " + std::to_string(k) + " folds");
    }
  }

  forest::Rng rng(seed);
  std::vector<Fold> folds(k);
  std::size_t offset = 0;
  for (auto& members : by_class) {
    for (std::size_t i = members.size(); i > 1; --i)
      std::swap(members[i - 1], members[static_cast<std::size_t>(rng.below(i))]);
    for (std::size_t j = 0; j < members.size(); ++j) folds[(offset + j) % k].push_back(members[j]);
    offset += members.size();
  }
  for (auto& f : folds) std::sort(f.begin(), f.end());
  return folds;
}

Holdout stratified_holdout(std::span<const textcore::TaskLabel> labels, std::uint64_t seed) {
  auto folds = stratified_kfold(labels, 5, seed);
  Holdout h;
  h.test = std::move(folds[0]);
  for (std::size_t f = 1; f < folds.size(); ++f) h.train.insert(h.train.end(), folds[f].begin(), folds[f].end());
  std::sort(h.train.begin(), h.train.end());
  return h;
}

}  // namespace paratask::evalkit
