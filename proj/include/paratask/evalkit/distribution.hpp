#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "paratask/textcore/task_label.hpp"

namespace paratask::evalkit {

struct DatasetPrediction {
  std::string dataset;
  textcore::TaskLabel task = textcore::TaskLabel::ImageRecaptioning;
};

struct DistributionRow {
  std::string dataset;
  std::array<std::uint64_t, textcore::kNumTasks> counts{};
  std::uint64_t total = 0;

  // 100 * count / total.
  double percentage(textcore::TaskLabel task) const;
  // One decimal place, the way the report prints it.
  std::string percentage_text(textcore::TaskLabel task) const;
};

// Predicted-task frequencies per dataset (sorted by name) and a totals row.
struct DistributionReport {
  std::vector<DistributionRow> datasets;
  DistributionRow totals;

  std::string render_table() const;
  nlohmann::json to_json() const;
  void write_csv(std::ostream& out) const;
};

// Throws EmptyInput for no predictions and InvalidArgument for an Unknown task
// or a missing dataset name.
DistributionReport distribution_report(std::span<const DatasetPrediction> predictions);

// Builds a row from counts directly.
DistributionRow make_distribution_row(std::string dataset,
                                      const std::array<std::uint64_t, textcore::kNumTasks>& counts);

// "1,858"-style digit grouping.
std::string group_thousands(std::uint64_t n);

}  // namespace paratask::evalkit
