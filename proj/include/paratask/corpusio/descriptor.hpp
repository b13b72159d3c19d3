#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "paratask/textcore/task_label.hpp"

namespace paratask::corpusio {

enum class CorpusFormat { Jsonl, Tsv, Csv };

// Where each pair field comes from: a JSON key, a header column name, or a
// zero-based column index for headerless TSV/CSV.
struct FieldMapping {
  std::string text_a;
  std::string text_b;
  std::optional<std::string> task;  // field holding a gold task name
};

// Keep a record only if `field` equals one of `values` (string comparison,
// case-insensitive).
struct RecordFilter {
  std::string field;
  std::vector<std::string> values;
};

struct CorpusDescriptor {
  std::string name;
  std::vector<std::filesystem::path> paths;
  CorpusFormat format = CorpusFormat::Jsonl;
  bool header = true;  // TSV/CSV only
  FieldMapping mapping;
  std::optional<textcore::TaskLabel> gold_task;
  std::optional<RecordFilter> filter;
};

// JSON descriptor file:
//   {"name": "...", "paths": ["file.tsv"], "format": "jsonl|tsv|csv",
//    "header": true, "mapping": {"text_a": "...", "text_b": "...", "task": "..."},
//    "gold_task": "SentenceCompression",
//    "filter": {"field": "label", "equals": ["entailment"]}}
// Relative paths resolve against the descriptor's directory. Throws
// ParseError or MappingError.
CorpusDescriptor load_descriptor(const std::filesystem::path& path);
CorpusDescriptor parse_descriptor(std::string_view json_text, const std::filesystem::path& base_dir);

std::string_view format_name(CorpusFormat f) noexcept;

}  // namespace paratask::corpusio
