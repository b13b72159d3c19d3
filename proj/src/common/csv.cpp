#include "paratask/common/csv.hpp"

#include "paratask/common/error.hpp"

namespace paratask::csv {

Reader::Reader(std::istream& in, char delimiter) : in_(in), delim_(delimiter) {}

std::optional<Row> Reader::next() {
  std::string line;
  if (!std::getline(in_, line)) return std::nullopt;
  ++line_;
  record_line_ = line_;

  Row row;
  std::string field;
  bool quoted = false;
  bool was_quoted = false;
  std::size_t i = 0;
  while (true) {
    if (i >= line.size()) {
      if (quoted) {
        // Quoted field continues on the next physical line.
        if (!std::getline(in_, line)) {
          throw Error(ErrorCode::ParseError,
                      "unterminated quoted field starting on line " +
                          std::to_string(record_line_));
        }
        ++line_;
        field.push_back('\n');
        i = 0;
        continue;
      }
      break;
    }
    char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field.push_back('"');
          i += 2;
          continue;
        }
        quoted = false;
      } else {
        field.push_back(c);
      }
      ++i;
      continue;
    }
    if (c == '"' && field.empty() && !was_quoted) {
      quoted = true;
      was_quoted = true;
    } else if (c == delim_) {
      row.push_back(std::move(field));
      field.clear();
      was_quoted = false;
    } else if (c == '\r' && i + 1 == line.size()) {
      // CRLF line ending
    } else {
      field.push_back(c);
    }
    ++i;
  }
  row.push_back(std::move(field));
  return row;
}

Row split_tsv(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  Row out;
  std::size_t start = 0;
  while (true) {
    std::size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      out.emplace_back(line.substr(start));
      break;
    }
    out.emplace_back(line.substr(start, tab - start));
    start = tab + 1;
  }
  return out;
}

void write_row(std::ostream& out, const Row& row, char delimiter) {
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) out << delimiter;
    const std::string& f = row[i];
    bool needs_quotes = f.find_first_of(std::string{delimiter, '"', '\n', '\r'}) !=
                        std::string::npos;
    if (!needs_quotes) {
      out << f;
      continue;
    }
    out << '"';
    for (char c : f) {
      if (c == '"') out << '"';
      out << c;
    }
    out << '"';
  }
  out << '\n';
}

}  // namespace paratask::csv
