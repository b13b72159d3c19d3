#include "paratask/featurize/feature_file.hpp"

#include <fstream>
#include <istream>
#include <ostream>

#include "paratask/common/csv.hpp"
#include "paratask/common/error.hpp"
#include "paratask/common/number_format.hpp"

namespace paratask::featurize {
namespace {

constexpr std::string_view kMagic = "paratask-features";
constexpr int kVersion = 1;

}  // namespace

void write_feature_table(std::ostream& out, const FeatureTable& table) {
  out << kMagic << '\t' << kVersion << '\n';
  out << "schema\t" << table.schema_hash << '\n';
  out << "width\t" << table.width << '\n';
  for (const auto& row : table.rows) {
    if (row.values.size() != table.width)
      throw Error(ErrorCode::InvalidArgument, "row " + row.id + " has the wrong width");
    out << row.id << '\t' << row.dataset << '\t'
        << (row.label ? textcore::task_name(*row.label) : std::string_view("-"));
    for (double v : row.values) out << '\t' << format_roundtrip(v);
    out << '\n';
  }
}

void save_feature_table(const std::filesystem::path& path, const FeatureTable& table) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  write_feature_table(out, table);
  if (!out) throw Error(ErrorCode::IoError, "failed writing " + path.string());
}

FeatureTable read_feature_table(std::istream& in) {
  FeatureTable table;
  std::string line;
  std::size_t line_no = 0;
  auto where = [&] { return "features line " + std::to_string(line_no); };

  auto header = [&](std::string_view key) {
    if (!std::getline(in, line)) throw Error(ErrorCode::ParseError, "truncated feature file header");
    ++line_no;
    auto f = csv::split_tsv(line);
    if (f.size() != 2 || f[0] != key) throw Error(ErrorCode::ParseError, where() + ": expected " + std::string(key));
    return f[1];
  };
  if (auto v = header(kMagic); parse_integer(v, "feature file version") != kVersion)
    throw Error(ErrorCode::VersionMismatch, "feature file version " + v);
  table.schema_hash = header("schema");
  table.width = static_cast<std::size_t>(parse_integer(header("width"), "feature width"));

  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    auto f = csv::split_tsv(line);
    if (f.size() != 3 + table.width) {
      throw Error(ErrorCode::ParseError, where() + ": expected " + std::to_string(3 + table.width) +
                                             " fields, got " + std::to_string(f.size()));
    }
    FeatureRow row;
    row.id = f[0];
    row.dataset = f[1];
    if (f[2] != "-") {
      row.label = textcore::parse_task_label(f[2]);
      if (!row.label || *row.label == textcore::TaskLabel::Unknown)
        throw Error(ErrorCode::ParseError, where() + ": bad task '" + f[2] + "'");
    }
    row.values.reserve(table.width);
    for (std::size_t i = 3; i < f.size(); ++i) row.values.push_back(parse_double(f[i], where()));
    table.rows.push_back(std::move(row));
  }
  return table;
}

FeatureTable load_feature_table(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  return read_feature_table(in);
}

}  // namespace paratask::featurize
