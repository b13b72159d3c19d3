#include "paratask/textcore/taxonomy.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "paratask/common/csv.hpp"
#include "paratask/common/error.hpp"
#include "paratask/common/number_format.hpp"

namespace paratask::embedded {
extern const std::string_view taxonomy_tsv;
}

namespace paratask::textcore {
namespace {

std::vector<std::string> split_citations(std::string_view field) {
  std::vector<std::string> out;
  if (field == "-" || field.empty()) return out;
  std::size_t start = 0;
  while (start <= field.size()) {
    std::size_t comma = field.find(',', start);
    if (comma == std::string_view::npos) comma = field.size();
    if (comma > start) out.emplace_back(field.substr(start, comma - start));
    start = comma + 1;
  }
  return out;
}

}  // namespace

std::string_view equivalence_class_name(EquivalenceClass c) noexcept {
  return c == EquivalenceClass::SemanticallyEquivalent ? "SemanticallyEquivalent"
                                                       : "SemanticallySimilar";
}

const TaxonomyRegistry& TaxonomyRegistry::bundled() {
  static const TaxonomyRegistry registry = parse(embedded::taxonomy_tsv);
  return registry;
}

TaxonomyRegistry TaxonomyRegistry::parse(std::string_view tsv) {
  TaxonomyRegistry reg;
  std::istringstream in{std::string(tsv)};
  std::string line;
  std::size_t line_no = 0;
  std::set<std::string> names;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line.rfind("# version\t", 0) == 0) {
      reg.version_ = static_cast<int>(parse_integer(line.substr(10), "taxonomy version"));
      continue;
    }
    if (line[0] == '#') continue;
    auto f = csv::split_tsv(line);
    if (f.size() != 5) {
      throw Error(ErrorCode::ParseError, "taxonomy line " + std::to_string(line_no) +
                                             ": expected 5 fields, got " +
                                             std::to_string(f.size()));
    }
    TaxonomyEntry e;
    e.name = f[0];
    if (f[1] == "SemanticallyEquivalent") {
      e.equivalence = EquivalenceClass::SemanticallyEquivalent;
    } else if (f[1] == "SemanticallySimilar") {
      e.equivalence = EquivalenceClass::SemanticallySimilar;
    } else {
      throw Error(ErrorCode::ParseError, "taxonomy line " + std::to_string(line_no) +
                                             ": unknown class '" + f[1] + "'");
    }
    e.parent = f[2] == "-" ? "" : f[2];
    e.definition = f[3];
    e.citations = split_citations(f[4]);
    if (!names.insert(e.name).second) {
      throw Error(ErrorCode::ParseError, "taxonomy line " + std::to_string(line_no) +
                                             ": duplicate task '" + e.name + "'");
    }
    reg.entries_.push_back(std::move(e));
  }
  if (reg.version_ <= 0) throw Error(ErrorCode::ParseError, "taxonomy file lacks a version line");
  for (const auto& e : reg.entries_) {
    if (!e.parent.empty() && !names.count(e.parent))
      throw Error(ErrorCode::ParseError, "taxonomy parent '" + e.parent + "' is not a task");
  }
  return reg;
}

TaxonomyRegistry TaxonomyRegistry::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

std::vector<TaxonomyEntry> TaxonomyRegistry::lookup(std::string_view name) const {
  for (const auto& e : entries_)
    if (e.name == name) return {e};
  return {};
}

std::vector<TaxonomyEntry> TaxonomyRegistry::filter(EquivalenceClass c) const {
  std::vector<TaxonomyEntry> out;
  for (const auto& e : entries_)
    if (e.equivalence == c) out.push_back(e);
  return out;
}

std::vector<TaxonomyEntry> TaxonomyRegistry::children(std::string_view parent) const {
  std::vector<TaxonomyEntry> out;
  for (const auto& e : entries_)
    if (e.parent == parent) out.push_back(e);
  return out;
}

}  // namespace paratask::textcore
