#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "paratask/textcore/pair.hpp"

namespace paratask::corpusio {

// Splits `total` as evenly as possible over `available.size()` sources, giving
// the remainder to the first ones. A source with too few items keeps what it
// has and the shortfall moves on to the others. Returns an empty vector when
// the sources together hold fewer than `total`.
std::vector<std::size_t> balanced_quota(std::size_t total, std::span<const std::size_t> available);

struct SampleSummary {
  // task -> dataset -> drawn count
  std::map<std::string, std::map<std::string, std::size_t>> drawn;
};

// Draws per_task labeled pairs for each of the five tasks, spread over that
// task's datasets (sorted by name) as evenly as possible. Unlabeled pairs are
// ignored; repeated ids count once. Throws InsufficientData naming the task.
std::vector<textcore::ParaphrasePair> sample_training_set(
    std::span<const textcore::ParaphrasePair> pairs, std::size_t per_task, std::uint64_t seed,
    SampleSummary* summary = nullptr);

}  // namespace paratask::corpusio
