#include "paratask/embed/provider.hpp"

#include <unicode/utf8.h>

#include <cmath>

#include "paratask/common/error.hpp"
#include "paratask/common/hashing.hpp"
#include "paratask/textcore/text.hpp"

namespace paratask::embed {

BuiltinProvider::BuiltinProvider(BuiltinConfig config) : config_(config) {
  if (config_.dimension == 0)
    throw Error(ErrorCode::InvalidArgument, "builtin embedding dimension must be positive");
  if (config_.min_order == 0 || config_.min_order > config_.max_order)
    throw Error(ErrorCode::InvalidArgument, "invalid builtin n-gram range");
}

std::string BuiltinProvider::id() const {
  return "builtin:fnv1a64-char" + std::to_string(config_.min_order) + "-" +
         std::to_string(config_.max_order) + "-d" + std::to_string(config_.dimension);
}

std::vector<double> BuiltinProvider::bucket_counts(std::string_view text) const {
  std::vector<double> counts(config_.dimension, 0.0);
  if (text.empty()) return counts;

  const std::string padded = "<" + textcore::to_lower(text) + ">";
  // Byte offset of every code point boundary.
  std::vector<std::size_t> bounds;
  const auto* s = reinterpret_cast<const uint8_t*>(padded.data());
  const int32_t len = static_cast<int32_t>(padded.size());
  for (int32_t i = 0; i < len;) {
    bounds.push_back(static_cast<std::size_t>(i));
    U8_FWD_1(s, i, len);
  }
  bounds.push_back(padded.size());
  const std::size_t cps = bounds.size() - 1;

  for (std::size_t n = config_.min_order; n <= config_.max_order && n <= cps; ++n) {
    for (std::size_t i = 0; i + n <= cps; ++i) {
      std::string_view gram(padded.data() + bounds[i], bounds[i + n] - bounds[i]);
      counts[fnv1a64(gram) % config_.dimension] += 1.0;
    }
  }
  return counts;
}

std::vector<Embedding> BuiltinProvider::embed_texts(std::span<const std::string> texts) const {
  std::vector<Embedding> out;
  out.reserve(texts.size());
  const std::string provider = id();
  for (const auto& text : texts) {
    auto v = bucket_counts(text);
    double sq = 0.0;
    for (double x : v) sq += x * x;
    if (sq > 0.0) {
      const double norm = std::sqrt(sq);
      for (double& x : v) x /= norm;
    }
    out.push_back({std::move(v), provider});
  }
  return out;
}

}  // namespace paratask::embed
