#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "paratask/textcore/task_label.hpp"

namespace paratask::evalkit {

using textcore::TaskLabel;

// Counts indexed by (actual, predicted). Rows are the five tasks; columns are
// the five tasks plus, when enabled, a predicted-only Unknown column.
class ConfusionMatrix {
 public:
  explicit ConfusionMatrix(bool unknown_column = false);

  void add(TaskLabel actual, TaskLabel predicted, std::uint64_t n = 1);

  bool has_unknown_column() const noexcept { return unknown_column_; }
  std::size_t num_columns() const noexcept { return unknown_column_ ? 6 : 5; }
  std::uint64_t count(TaskLabel actual, TaskLabel predicted) const;
  std::uint64_t row_total(TaskLabel actual) const;
  std::uint64_t column_total(TaskLabel predicted) const;
  std::uint64_t total() const noexcept { return total_; }
  std::uint64_t trace() const;

  // Header row "actual\predicted,<labels...>", then one row per actual task.
  void write_csv(std::ostream& out) const;
  // Counts plus row-normalised percentages, aligned for terminals.
  std::string render_table() const;
  nlohmann::json to_json() const;

  bool operator==(const ConfusionMatrix&) const = default;

 private:
  bool unknown_column_;
  std::array<std::array<std::uint64_t, 6>, textcore::kNumTasks> cells_{};
  std::uint64_t total_ = 0;
};

struct ClassStats {
  double precision = 0;
  double recall = 0;
  double f1 = 0;
  std::uint64_t support = 0;
};

struct ConfusionStats {
  ConfusionMatrix matrix;
  double micro_precision = 0;
  double micro_recall = 0;
  double micro_f1 = 0;
  double macro_f1 = 0;
  double accuracy = 0;
  std::array<ClassStats, textcore::kNumTasks> per_class{};

  nlohmann::json to_json() const;
};

// Micro scores pool TP/FP/FN over the five tasks. An Unknown prediction is a
// false negative for its row and a false positive for nobody, so without
// Unknown micro-F1 equals trace / total.
ConfusionStats stats_from_matrix(const ConfusionMatrix& matrix);

// Throws LengthMismatch for unequal or empty inputs and InvalidArgument for an
// Unknown actual label.
ConfusionStats confusion_stats(std::span<const TaskLabel> actual,
                               std::span<const TaskLabel> predicted);

}  // namespace paratask::evalkit
