#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "paratask/featurize/vectorize.hpp"
#include "paratask/textcore/task_label.hpp"

namespace paratask::featurize {

struct FeatureRow {
  std::string id;
  std::string dataset;
  std::optional<textcore::TaskLabel> label;
  std::vector<double> values;
};

// Feature vectors of many pairs under one schema.
struct FeatureTable {
  std::string schema_hash;
  std::size_t width = 0;
  std::vector<FeatureRow> rows;
};

// Tab-separated text: a "paratask-features" version line, "schema" and "width"
// lines, then one row per pair: id, dataset, task name or "-", values in
// shortest round-trip notation.
void write_feature_table(std::ostream& out, const FeatureTable& table);
void save_feature_table(const std::filesystem::path& path, const FeatureTable& table);
FeatureTable read_feature_table(std::istream& in);
FeatureTable load_feature_table(const std::filesystem::path& path);

}  // namespace paratask::featurize
