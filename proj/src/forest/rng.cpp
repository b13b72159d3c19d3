#include "paratask/forest/rng.hpp"

#include "paratask/common/hashing.hpp"

namespace paratask::forest {

std::uint64_t Rng::below(std::uint64_t bound) {
  // Reject the low (2^64 mod bound) values so every residue is equally likely.
  const std::uint64_t threshold = (0 - bound) % bound;
  while (true) {
    const std::uint64_t x = engine_();
    if (x >= threshold) return x % bound;
  }
}

}  // namespace paratask::forest

namespace paratask::forest {

std::uint64_t derive_seed(std::uint64_t seed, std::string_view stage) noexcept {
  // splitmix64 finalizer over the seed mixed with the stage name's hash.
  std::uint64_t z = seed ^ fnv1a64(stage);
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace paratask::forest
