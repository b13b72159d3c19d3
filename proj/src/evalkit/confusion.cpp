#include "paratask/evalkit/confusion.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "paratask/common/csv.hpp"
#include "paratask/common/error.hpp"
#include "paratask/common/number_format.hpp"

namespace paratask::evalkit {

using textcore::code;
using textcore::kAllTasks;
using textcore::kNumTasks;

ConfusionMatrix::ConfusionMatrix(bool unknown_column) : unknown_column_(unknown_column) {}

void ConfusionMatrix::add(TaskLabel actual, TaskLabel predicted, std::uint64_t n) {
  if (actual == TaskLabel::Unknown)
    throw Error(ErrorCode::InvalidArgument, "Unknown cannot be an actual task");
  if (predicted == TaskLabel::Unknown && !unknown_column_)
    throw Error(ErrorCode::InvalidArgument, "Unknown prediction in a matrix without Unknown column");
  cells_[code(actual)][code(predicted)] += n;
  total_ += n;
}

std::uint64_t ConfusionMatrix::count(TaskLabel actual, TaskLabel predicted) const {
  return cells_.at(code(actual)).at(code(predicted));
}

std::uint64_t ConfusionMatrix::row_total(TaskLabel actual) const {
  const auto& row = cells_.at(code(actual));
  std::uint64_t s = 0;
  for (std::size_t c = 0; c < num_columns(); ++c) s += row[c];
  return s;
}

std::uint64_t ConfusionMatrix::column_total(TaskLabel predicted) const {
  std::uint64_t s = 0;
  for (const auto& row : cells_) s += row.at(code(predicted));
  return s;
}

std::uint64_t ConfusionMatrix::trace() const {
  std::uint64_t s = 0;
  for (std::size_t c = 0; c < kNumTasks; ++c) s += cells_[c][c];
  return s;
}

void ConfusionMatrix::write_csv(std::ostream& out) const {
  csv::Row header{"actual\\predicted"};
  for (std::size_t c = 0; c < num_columns(); ++c)
    header.emplace_back(textcore::task_name(static_cast<TaskLabel>(c)));
  csv::write_row(out, header);
  for (auto actual : kAllTasks) {
    csv::Row row{std::string(textcore::task_name(actual))};
    for (std::size_t c = 0; c < num_columns(); ++c)
      row.push_back(std::to_string(cells_[code(actual)][c]));
    csv::write_row(out, row);
  }
}

std::string ConfusionMatrix::render_table() const {
  constexpr std::size_t kLabelWidth = 24;
  std::vector<std::vector<std::string>> cells;
  std::vector<std::size_t> widths;
  for (std::size_t c = 0; c < num_columns(); ++c)
    widths.push_back(textcore::task_name(static_cast<TaskLabel>(c)).size());
  for (auto actual : kAllTasks) {
    const auto row_sum = row_total(actual);
    auto& row = cells.emplace_back();
    for (std::size_t c = 0; c < num_columns(); ++c) {
      const auto n = cells_[code(actual)][c];
      const double pct = row_sum ? 100.0 * static_cast<double>(n) / static_cast<double>(row_sum) : 0.0;
      row.push_back(std::to_string(n) + " (" + format_fixed(pct, 1) + "%)");
      widths[c] = std::max(widths[c], row.back().size());
    }
  }
  std::ostringstream out;
  out << std::left << std::setw(kLabelWidth) << "actual \\ predicted";
  for (std::size_t c = 0; c < num_columns(); ++c)
    out << "  " << std::right << std::setw(static_cast<int>(widths[c])) << textcore::task_name(static_cast<TaskLabel>(c));
  out << '\n';
  for (auto actual : kAllTasks) {
    out << std::left << std::setw(kLabelWidth) << textcore::task_name(actual);
    for (std::size_t c = 0; c < num_columns(); ++c)
      out << "  " << std::right << std::setw(static_cast<int>(widths[c])) << cells[code(actual)][c];
    out << '\n';
  }
  out << "total " << total_ << ", diagonal " << trace() << '\n';
  return out.str();
}

nlohmann::json ConfusionMatrix::to_json() const {
  nlohmann::json j;
  std::vector<std::string> cols;
  for (std::size_t c = 0; c < num_columns(); ++c)
    cols.emplace_back(textcore::task_name(static_cast<TaskLabel>(c)));
  j["predicted_labels"] = cols;
  std::vector<std::string> rows;
  nlohmann::json counts = nlohmann::json::array();
  for (auto actual : kAllTasks) {
    rows.emplace_back(textcore::task_name(actual));
    std::vector<std::uint64_t> r(cells_[code(actual)].begin(),
                                 cells_[code(actual)].begin() + static_cast<std::ptrdiff_t>(num_columns()));
    counts.push_back(r);
  }
  j["actual_labels"] = rows;
  j["counts"] = counts;
  j["total"] = total_;
  return j;
}

nlohmann::json ConfusionStats::to_json() const {
  nlohmann::json j;
  j["confusion_matrix"] = matrix.to_json();
  j["micro_precision"] = micro_precision;
  j["micro_recall"] = micro_recall;
  j["micro_f1"] = micro_f1;
  j["macro_f1"] = macro_f1;
  j["accuracy"] = accuracy;
  nlohmann::json per = nlohmann::json::object();
  for (auto t : kAllTasks) {
    const auto& s = per_class[code(t)];
    per[std::string(textcore::task_name(t))] = {
        {"precision", s.precision}, {"recall", s.recall}, {"f1", s.f1}, {"support", s.support}};
  }
  j["per_class"] = per;
  return j;
}

namespace {

double ratio(std::uint64_t num, std::uint64_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

double harmonic(double p, double r) { return p + r == 0.0 ? 0.0 : 2.0 * p * r / (p + r); }

}  // namespace

ConfusionStats stats_from_matrix(const ConfusionMatrix& m) {
  ConfusionStats s{m};
  std::uint64_t tp = 0, fp = 0, fn = 0;
  double f1_sum = 0;
  for (auto t : kAllTasks) {
    const auto diag = m.count(t, t);
    const auto predicted = m.column_total(t);
    const auto actual = m.row_total(t);
    tp += diag;
    fp += predicted - diag;
    fn += actual - diag;
    auto& c = s.per_class[code(t)];
    c.precision = ratio(diag, predicted);
    c.recall = ratio(diag, actual);
    c.f1 = harmonic(c.precision, c.recall);
    c.support = actual;
    f1_sum += c.f1;
  }
  s.micro_precision = ratio(tp, tp + fp);
  s.micro_recall = ratio(tp, tp + fn);
  s.micro_f1 = ratio(2 * tp, 2 * tp + fp + fn);
  s.macro_f1 = f1_sum / static_cast<double>(kNumTasks);
  s.accuracy = ratio(m.trace(), m.total());
  return s;
}

ConfusionStats confusion_stats(std::span<const TaskLabel> actual, std::span<const TaskLabel> predicted) {
  if (actual.size() != predicted.size() || actual.empty()) {
    throw Error(ErrorCode::LengthMismatch, std::to_string(actual.size()) + " actual vs " +
                                               std::to_string(predicted.size()) +
                                               " predicted labels");
  }
  const bool unknown = std::find(predicted.begin(), predicted.end(), TaskLabel::Unknown) != predicted.end();
  ConfusionMatrix m(unknown);
  for (std::size_t i = 0; i < actual.size(); ++i) m.add(actual[i], predicted[i]);
  return stats_from_matrix(m);
}

}  // namespace paratask::evalkit
