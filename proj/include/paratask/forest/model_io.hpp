#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "paratask/forest/random_forest.hpp"

namespace paratask::forest {

inline constexpr std::uint32_t kModelFormatVersion = 1;

// Binary little-endian container; see docs/model_format.md for the layout.
std::vector<std::uint8_t> serialize_model(const ForestModel& model);

// Throws VersionMismatch for another format version and CorruptModel for a bad
// magic, a checksum failure, truncation or an invalid tree.
ForestModel deserialize_model(std::span<const std::uint8_t> bytes);

void save_model(const ForestModel& model, const std::filesystem::path& path);
ForestModel load_model(const std::filesystem::path& path);

}  // namespace paratask::forest
