#include "paratask/corpusio/descriptor.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "paratask/common/error.hpp"

namespace paratask::corpusio {
namespace {

using json = nlohmann::json;

std::string field_spec(const json& v, const char* what) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_unsigned() || v.is_number_integer()) return std::to_string(v.get<long long>());
  throw Error(ErrorCode::MappingError, std::string("mapping.") + what + " must be a name or column index");
}

}  // namespace

std::string_view format_name(CorpusFormat f) noexcept {
  switch (f) {
    case CorpusFormat::Jsonl: return "jsonl";
    case CorpusFormat::Tsv: return "tsv";
    case CorpusFormat::Csv: return "csv";
  }
  return "jsonl";
}

CorpusDescriptor parse_descriptor(std::string_view json_text, const std::filesystem::path& base_dir) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("descriptor: ") + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorCode::ParseError, "descriptor must be a JSON object");

  CorpusDescriptor d;
  try {
    d.name = doc.at("name").get<std::string>();
    const auto& paths = doc.at("paths");
    if (paths.is_string()) {
      d.paths.emplace_back(paths.get<std::string>());
    } else {
      for (const auto& p : paths) d.paths.emplace_back(p.get<std::string>());
    }
    const auto fmt = doc.value("format", std::string("jsonl"));
    if (fmt == "jsonl") {
      d.format = CorpusFormat::Jsonl;
    } else if (fmt == "tsv") {
      d.format = CorpusFormat::Tsv;
    } else if (fmt == "csv") {
      d.format = CorpusFormat::Csv;
    } else {
      throw Error(ErrorCode::ParseError, "descriptor: unknown format '" + fmt + "'");
    }
    d.header = doc.value("header", true);
    if (doc.contains("gold_task") && !doc["gold_task"].is_null()) {
      const auto t = doc["gold_task"].get<std::string>();
      d.gold_task = textcore::parse_task_label(t);
      if (!d.gold_task || *d.gold_task == textcore::TaskLabel::Unknown)
        throw Error(ErrorCode::ParseError, "descriptor: unknown gold_task '" + t + "'");
    }
    if (doc.contains("filter") && !doc["filter"].is_null()) {
      const auto& f = doc["filter"];
      RecordFilter rf;
      rf.field = field_spec(f.at("field"), "filter.field");
      const auto& eq = f.at("equals");
      if (eq.is_string()) {
        rf.values.push_back(eq.get<std::string>());
      } else {
        for (const auto& v : eq) rf.values.push_back(v.get<std::string>());
      }
      d.filter = std::move(rf);
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("descriptor: ") + e.what());
  }

  if (!doc.contains("mapping") || !doc["mapping"].is_object())
    throw Error(ErrorCode::MappingError, "descriptor '" + d.name + "' has no mapping object");
  const auto& m = doc["mapping"];
  if (!m.contains("text_a") || !m.contains("text_b"))
    throw Error(ErrorCode::MappingError, "descriptor '" + d.name + "' must map text_a and text_b");
  d.mapping.text_a = field_spec(m["text_a"], "text_a");
  d.mapping.text_b = field_spec(m["text_b"], "text_b");
  if (m.contains("task") && !m["task"].is_null()) d.mapping.task = field_spec(m["task"], "task");

  if (d.name.empty()) throw Error(ErrorCode::ParseError, "descriptor name is empty");
  if (d.paths.empty()) throw Error(ErrorCode::ParseError, "descriptor '" + d.name + "' lists no files");
  for (auto& p : d.paths)
    if (p.is_relative()) p = base_dir / p;
  return d;
}

CorpusDescriptor load_descriptor(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open descriptor " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_descriptor(ss.str(), path.parent_path());
}

}  // namespace paratask::corpusio
