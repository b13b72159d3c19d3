#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace paratask::forest {

// mt19937_64 plus an unbiased bounded draw. Both are fully specified, so
// sequences agree across standard libraries (std distributions do not).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

}  // namespace paratask::forest

namespace paratask::forest {

// Independent stream seed for a named stage, e.g. derive_seed(seed, "folds").
std::uint64_t derive_seed(std::uint64_t seed, std::string_view stage) noexcept;

}  // namespace paratask::forest
