#include "paratask/corpusio/sampling.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <unordered_set>

#include "paratask/common/error.hpp"
#include "paratask/forest/rng.hpp"

namespace paratask::corpusio {

std::vector<std::size_t> balanced_quota(std::size_t total, std::span<const std::size_t> available) {
  const std::size_t have = std::accumulate(available.begin(), available.end(), std::size_t{0});
  if (have < total || available.empty()) return {};
  std::vector<std::size_t> quota(available.size(), 0);
  std::size_t left = total;
  // Each round splits what is left over the sources that still have room.
  while (left > 0) {
    std::vector<std::size_t> open;
    for (std::size_t i = 0; i < available.size(); ++i)
      if (quota[i] < available[i]) open.push_back(i);
    const std::size_t share = left / open.size();
    std::size_t extra = left % open.size();
    for (std::size_t i : open) {
      std::size_t want = share + (extra > 0 ? 1 : 0);
      if (extra > 0) --extra;
      const std::size_t take = std::min(want, available[i] - quota[i]);
      quota[i] += take;
      left -= take;
    }
  }
  return quota;
}

std::vector<textcore::ParaphrasePair> sample_training_set(
    std::span<const textcore::ParaphrasePair> pairs, std::size_t per_task, std::uint64_t seed,
    SampleSummary* summary) {
  // task -> dataset -> indices; std::map keeps datasets in name order.
  std::array<std::map<std::string, std::vector<std::size_t>>, textcore::kNumTasks> pools;
  std::unordered_set<std::string> seen;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& p = pairs[i];
    if (!p.gold_task || *p.gold_task == textcore::TaskLabel::Unknown) continue;
    if (!seen.insert(p.id).second) continue;
    pools[textcore::code(*p.gold_task)][p.dataset].push_back(i);
  }

  std::vector<textcore::ParaphrasePair> out;
  out.reserve(per_task * textcore::kNumTasks);
  for (auto task : textcore::kAllTasks) {
    auto& by_dataset = pools[textcore::code(task)];
    std::vector<std::size_t> sizes;
    for (const auto& [name, idx] : by_dataset) sizes.push_back(idx.size());
    auto quota = balanced_quota(per_task, sizes);
    if (quota.empty() && per_task > 0) {
      const auto have = std::accumulate(sizes.begin(), sizes.end(), std::size_t{0});
      throw Error(ErrorCode::InsufficientData,
                  std::string(textcore::task_name(task)) + ": need " + std::to_string(per_task) +
                      " pairs, corpora provide " + std::to_string(have));
    }
    std::size_t d = 0;
    for (auto& [name, idx] : by_dataset) {
      const std::size_t k = per_task == 0 ? 0 : quota[d++];
      forest::Rng rng(forest::derive_seed(seed, "sample/" + name));
      // Partial Fisher-Yates: the first k slots become the draw.
      for (std::size_t i = 0; i < k; ++i) {
        std::swap(idx[i], idx[i + rng.below(idx.size() - i)]);
        out.push_back(pairs[idx[i]]);
      }
      if (summary) summary->drawn[std::string(textcore::task_name(task))][name] = k;
    }
  }
  return out;
}

}  // namespace paratask::corpusio
