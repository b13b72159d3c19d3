#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

#include "paratask/textcore/pair.hpp"

namespace paratask::corpusio {

// Canonical pair JSONL: one object per line with id, text_a, text_b, optional
// task and dataset. Keys are written in that order.
void write_pairs(std::ostream& out, std::span<const textcore::ParaphrasePair> pairs);
void save_pairs(const std::filesystem::path& path, std::span<const textcore::ParaphrasePair> pairs);

// Throws ParseError naming the line for malformed records or unknown tasks.
std::vector<textcore::ParaphrasePair> read_pairs(std::istream& in);
std::vector<textcore::ParaphrasePair> load_pairs(const std::filesystem::path& path);

}  // namespace paratask::corpusio
