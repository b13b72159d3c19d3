#include "paratask/corpusio/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <map>
#include <optional>

#include "paratask/common/csv.hpp"
#include "paratask/common/error.hpp"
#include "paratask/textcore/text.hpp"

namespace paratask::corpusio {
namespace {

using json = nlohmann::json;
using FieldGetter = std::function<std::optional<std::string>(const std::string&)>;

std::string lower_ascii(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

class RecordSink {
 public:
  RecordSink(const CorpusDescriptor& d, IngestResult& out) : d_(d), out_(out) {}

  void operator()(std::size_t line, const FieldGetter& get) {
    ++out_.stats.records;
    if (d_.filter) {
      auto v = get(d_.filter->field);
      const bool keep = v && std::any_of(d_.filter->values.begin(), d_.filter->values.end(),
                                         [&](const std::string& want) {
                                           return lower_ascii(want) == lower_ascii(*v);
                                         });
      if (!keep) {
        ++out_.stats.filtered;
        return;
      }
    }
    auto a = get(d_.mapping.text_a);
    auto b = get(d_.mapping.text_b);
    if (!a || !b) return drop(line, "missing text field");
    textcore::ParaphrasePair p;
    p.text_a = textcore::normalize(*a);
    p.text_b = textcore::normalize(*b);
    if (p.text_a.empty() || p.text_b.empty()) return drop(line, "empty text");
    if (d_.gold_task) {
      p.gold_task = d_.gold_task;
    } else if (d_.mapping.task) {
      auto t = get(*d_.mapping.task);
      if (t && !t->empty()) {
        p.gold_task = textcore::parse_task_label(*t);
        if (!p.gold_task || *p.gold_task == textcore::TaskLabel::Unknown)
          return drop(line, "unknown task '" + *t + "'");
      }
    }
    p.dataset = d_.name;
    p.id = d_.name + ":" + std::to_string(line);
    out_.pairs.push_back(std::move(p));
    ++out_.stats.kept;
  }

 private:
  void drop(std::size_t line, std::string reason) {
    ++out_.stats.dropped;
    out_.dropped.push_back({line, std::move(reason)});
  }

  const CorpusDescriptor& d_;
  IngestResult& out_;
};

std::optional<std::string> json_field(const json& obj, const std::string& key) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  if (it->is_string()) return it->get<std::string>();
  if (it->is_primitive()) return it->dump();
  return std::nullopt;
}

std::size_t read_jsonl(std::istream& in, const std::string& file, std::size_t line_offset,
                       RecordSink& sink) {
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (std::all_of(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); })) continue;
    json obj;
    try {
      obj = json::parse(line);
    } catch (const json::exception& e) {
      throw Error(ErrorCode::ParseError, file + ":" + std::to_string(n) + ": " + e.what());
    }
    if (!obj.is_object())
      throw Error(ErrorCode::ParseError, file + ":" + std::to_string(n) + ": record is not an object");
    sink(line_offset + n, [&](const std::string& key) { return json_field(obj, key); });
  }
  return n;
}

// Resolves mapping names to column indices.
class Columns {
 public:
  Columns(const CorpusDescriptor& d, const csv::Row* header) {
    std::vector<std::string> wanted{d.mapping.text_a, d.mapping.text_b};
    if (d.mapping.task) wanted.push_back(*d.mapping.task);
    if (d.filter) wanted.push_back(d.filter->field);
    for (const auto& name : wanted) {
      if (header) {
        auto it = std::find(header->begin(), header->end(), name);
        if (it == header->end()) {
          throw Error(ErrorCode::MappingError,
                      "descriptor '" + d.name + "': column '" + name + "' not in header");
        }
        index_[name] = static_cast<std::size_t>(it - header->begin());
      } else {
        if (name.empty() || !std::all_of(name.begin(), name.end(), ::isdigit)) {
          throw Error(ErrorCode::MappingError, "descriptor '" + d.name +
                                                   "': headerless files need column indices, got '" +
                                                   name + "'");
        }
        index_[name] = std::stoul(name);
      }
    }
  }

  std::optional<std::string> get(const csv::Row& row, const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end() || it->second >= row.size()) return std::nullopt;
    return row[it->second];
  }

 private:
  std::map<std::string, std::size_t> index_;
};

std::size_t read_delimited(std::istream& in, const CorpusDescriptor& d, const std::string& file,
                           std::size_t line_offset, RecordSink& sink) {
  const bool tsv = d.format == CorpusFormat::Tsv;
  csv::Reader reader(in, ',');
  std::string line;
  std::size_t n = 0;
  auto next = [&]() -> std::optional<csv::Row> {
    if (!tsv) {
      auto row = reader.next();
      n = reader.record_line();
      return row;
    }
    if (!std::getline(in, line)) return std::nullopt;
    ++n;
    return csv::split_tsv(line);
  };

  std::optional<csv::Row> header;
  if (d.header) {
    header = next();
    if (!header) return n;
  }
  const Columns columns(d, header ? &*header : nullptr);
  try {
    while (auto row = next()) {
      if (row->size() == 1 && row->front().empty()) continue;  // blank line
      sink(line_offset + n, [&](const std::string& name) { return columns.get(*row, name); });
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ParseError) throw;
    throw Error(ErrorCode::ParseError, file + ": " + e.message());
  }
  // Physical lines, including those inside quoted fields.
  return tsv ? n : reader.lines_read();
}

}  // namespace

IngestResult ingest(const CorpusDescriptor& descriptor) {
  IngestResult result;
  RecordSink sink(descriptor, result);
  std::size_t offset = 0;
  for (const auto& path : descriptor.paths) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::IoError, "cannot open corpus file " + path.string());
    const auto file = path.string();
    if (descriptor.format == CorpusFormat::Jsonl) {
      offset += read_jsonl(in, file, offset, sink);
    } else {
      offset += read_delimited(in, descriptor, file, offset, sink);
    }
  }
  return result;
}

}  // namespace paratask::corpusio
