#pragma once

#include <array>
#include <map>
#include <span>
#include <vector>

#include "paratask/postag/pos_tag.hpp"

namespace paratask::postag {

// Relative frequencies of contiguous tag n-grams for n = 1..4. Each non-empty
// order sums to 1; orders longer than the tag sequence are empty.
struct PosNgramProfile {
  std::array<std::map<PosNgram, double>, kMaxNgramOrder> orders;

  const std::map<PosNgram, double>& order(std::size_t n) const { return orders.at(n - 1); }
  // 0 when the n-gram does not occur.
  double frequency(const PosNgram& gram) const;
};

PosNgramProfile pos_ngram_profile(std::span<const PosTag> tags);

// Distinct n-grams of every order occurring in `tags`, in sorted order.
std::array<std::vector<PosNgram>, kMaxNgramOrder> distinct_ngrams(std::span<const PosTag> tags);

}  // namespace paratask::postag
