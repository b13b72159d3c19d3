#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "paratask/textcore/task_label.hpp"

namespace paratask::evalkit {

using Fold = std::vector<std::size_t>;

// Partitions indices into k folds. Each class is shuffled with a seeded
// generator and dealt round-robin, continuing where the previous class
// stopped, so per-class and overall fold sizes differ by at most one. Fold
// contents are sorted. Throws InvalidArgument for k < 2 and TooFewSamples when
// a present class has fewer than k members.
std::vector<Fold> stratified_kfold(std::span<const textcore::TaskLabel> labels, std::size_t k,
                                   std::uint64_t seed);

struct Holdout {
  Fold train;
  Fold test;
};

// 80:20 split: fold 0 of a stratified 5-fold partition is the test set.
Holdout stratified_holdout(std::span<const textcore::TaskLabel> labels, std::uint64_t seed);

}  // namespace paratask::evalkit
