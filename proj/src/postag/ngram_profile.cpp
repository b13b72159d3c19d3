#include "paratask/postag/ngram_profile.hpp"

#include <algorithm>

namespace paratask::postag {
namespace {

PosNgram make_ngram(std::span<const PosTag> tags, std::size_t at, std::size_t n) {
  PosNgram g;
  g.order = static_cast<std::uint8_t>(n);
  std::copy_n(tags.begin() + static_cast<std::ptrdiff_t>(at), n, g.tags.begin());
  return g;
}

}  // namespace

double PosNgramProfile::frequency(const PosNgram& gram) const {
  if (gram.order == 0 || gram.order > kMaxNgramOrder) return 0.0;
  const auto& m = orders[gram.order - 1];
  auto it = m.find(gram);
  return it == m.end() ? 0.0 : it->second;
}

PosNgramProfile pos_ngram_profile(std::span<const PosTag> tags) {
  PosNgramProfile profile;
  for (std::size_t n = 1; n <= kMaxNgramOrder; ++n) {
    if (tags.size() < n) break;
    const std::size_t total = tags.size() - n + 1;
    std::map<PosNgram, std::size_t> counts;
    for (std::size_t i = 0; i < total; ++i) ++counts[make_ngram(tags, i, n)];
    auto& out = profile.orders[n - 1];
    for (const auto& [gram, count] : counts)
      out.emplace_hint(out.end(), gram, static_cast<double>(count) / static_cast<double>(total));
  }
  return profile;
}

std::array<std::vector<PosNgram>, kMaxNgramOrder> distinct_ngrams(std::span<const PosTag> tags) {
  std::array<std::vector<PosNgram>, kMaxNgramOrder> out;
  for (std::size_t n = 1; n <= kMaxNgramOrder && n <= tags.size(); ++n) {
    auto& v = out[n - 1];
    for (std::size_t i = 0; i + n <= tags.size(); ++i) v.push_back(make_ngram(tags, i, n));
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }
  return out;
}

}  // namespace paratask::postag
