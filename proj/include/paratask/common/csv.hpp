#pragma once

#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace paratask::csv {

using Row = std::vector<std::string>;

// RFC 4180 reader: quoted fields may contain the delimiter, doubled quotes and
// line breaks. Tracks the physical line on which the current record started.
class Reader {
 public:
  explicit Reader(std::istream& in, char delimiter = ',');

  // Returns nullopt at end of input. Throws ParseError on an unterminated
  // quoted field.
  std::optional<Row> next();

  std::size_t record_line() const noexcept { return record_line_; }
  std::size_t lines_read() const noexcept { return line_; }

 private:
  std::istream& in_;
  char delim_;
  std::size_t line_ = 0;
  std::size_t record_line_ = 0;
};

// Splits one TSV line; no quoting, every tab separates.
Row split_tsv(std::string_view line);

void write_row(std::ostream& out, const Row& row, char delimiter = ',');

}  // namespace paratask::csv
