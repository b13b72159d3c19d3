#include "paratask/evalkit/distribution.hpp"

#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include "paratask/common/csv.hpp"
#include "paratask/common/error.hpp"
#include "paratask/common/number_format.hpp"

namespace paratask::evalkit {

using textcore::code;
using textcore::kAllTasks;

double DistributionRow::percentage(textcore::TaskLabel task) const {
  if (total == 0) return 0.0;
  return 100.0 * static_cast<double>(counts.at(code(task))) / static_cast<double>(total);
}

std::string DistributionRow::percentage_text(textcore::TaskLabel task) const {
  return format_fixed(percentage(task), 1);
}

std::string group_thousands(std::uint64_t n) {
  std::string digits = std::to_string(n);
  std::string out;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i && (digits.size() - i) % 3 == 0) out.push_back(',');
    out.push_back(digits[i]);
  }
  return out;
}

DistributionRow make_distribution_row(std::string dataset,
                                      const std::array<std::uint64_t, textcore::kNumTasks>& counts) {
  DistributionRow row{std::move(dataset), counts, 0};
  for (auto c : counts) row.total += c;
  return row;
}

DistributionReport distribution_report(std::span<const DatasetPrediction> predictions) {
  if (predictions.empty()) throw Error(ErrorCode::EmptyInput, "no predictions to report");
  std::map<std::string, std::array<std::uint64_t, textcore::kNumTasks>> counts;
  for (const auto& p : predictions) {
    if (p.dataset.empty()) throw Error(ErrorCode::InvalidArgument, "prediction without dataset");
    if (p.task == textcore::TaskLabel::Unknown)
      throw Error(ErrorCode::InvalidArgument, "Unknown is not a predictable task");
    ++counts[p.dataset][code(p.task)];
  }
  DistributionReport r;
  std::array<std::uint64_t, textcore::kNumTasks> totals{};
  for (const auto& [name, c] : counts) {
    r.datasets.push_back(make_distribution_row(name, c));
    for (std::size_t i = 0; i < c.size(); ++i) totals[i] += c[i];
  }
  r.totals = make_distribution_row("Total", totals);
  return r;
}

std::string DistributionReport::render_table() const {
  std::size_t name_width = 7;  // "Dataset"
  for (const auto& d : datasets) name_width = std::max(name_width, d.dataset.size());
  constexpr int kCell = 24;
  std::ostringstream out;
  out << std::left << std::setw(static_cast<int>(name_width)) << "Dataset";
  for (auto t : kAllTasks) out << std::right << std::setw(kCell) << textcore::task_display_name(t);
  out << std::right << std::setw(12) << "Total" << '\n';

  auto row = [&](const DistributionRow& r) {
    out << std::left << std::setw(static_cast<int>(name_width)) << r.dataset;
    for (auto t : kAllTasks) {
      std::string cell = r.percentage_text(t) + "% " + group_thousands(r.counts[code(t)]);
      out << std::right << std::setw(kCell) << cell;
    }
    out << std::right << std::setw(12) << group_thousands(r.total) << '\n';
  };
  for (const auto& d : datasets) row(d);
  out << std::string(name_width + kCell * kAllTasks.size() + 12, '-') << '\n';
  row(totals);
  return out.str();
}

namespace {

nlohmann::json row_json(const DistributionRow& r) {
  nlohmann::json tasks = nlohmann::json::object();
  for (auto t : kAllTasks) {
    tasks[std::string(textcore::task_name(t))] = {{"count", r.counts[code(t)]},
                                                  {"percent", r.percentage_text(t)},
                                                  {"percentage", r.percentage(t)}};
  }
  return {{"dataset", r.dataset}, {"tasks", tasks}, {"total", r.total}};
}

}  // namespace

nlohmann::json DistributionReport::to_json() const {
  nlohmann::json j;
  j["datasets"] = nlohmann::json::array();
  for (const auto& d : datasets) j["datasets"].push_back(row_json(d));
  j["totals"] = row_json(totals);
  return j;
}

void DistributionReport::write_csv(std::ostream& out) const {
  csv::Row header{"dataset"};
  for (auto t : kAllTasks) {
    header.push_back(std::string(textcore::task_name(t)) + "_percent");
    header.push_back(std::string(textcore::task_name(t)) + "_count");
  }
  header.emplace_back("total");
  csv::write_row(out, header);
  auto emit = [&](const DistributionRow& r) {
    csv::Row row{r.dataset};
    for (auto t : kAllTasks) {
      row.push_back(r.percentage_text(t));
      row.push_back(std::to_string(r.counts[code(t)]));
    }
    row.push_back(std::to_string(r.total));
    csv::write_row(out, row);
  };
  for (const auto& d : datasets) emit(d);
  emit(totals);
}

}  // namespace paratask::evalkit
