#include "paratask/embed/provider.hpp"

#include <cmath>
#include <fstream>

#include "paratask/common/csv.hpp"
#include "paratask/common/error.hpp"
#include "paratask/common/number_format.hpp"
#include "paratask/textcore/text.hpp"

namespace paratask::embed {

std::string PrecomputedProvider::id() const {
  return "precomputed:d" + std::to_string(dimension_);
}

std::vector<Embedding> PrecomputedProvider::embed_texts(std::span<const std::string> texts) const {
  std::vector<Embedding> out;
  out.reserve(texts.size());
  const std::string provider = id();
  for (const auto& text : texts) {
    auto it = table_.find(text);
    if (it == table_.end()) {
      throw Error(ErrorCode::MissingEmbedding,
                  "precomputed store has no vector for text \"" + text + "\"");
    }
    out.push_back({it->second, provider});
  }
  return out;
}

PrecomputedProvider load_precomputed(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open embedding store " + path.string());
  PrecomputedProvider p;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    auto fields = csv::split_tsv(line);
    const std::string where = path.filename().string() + ":" + std::to_string(line_no);
    if (fields.size() < 2) throw Error(ErrorCode::ParseError, where + ": expected text and vector");
    std::vector<double> v;
    v.reserve(fields.size() - 1);
    for (std::size_t i = 1; i < fields.size(); ++i) {
      double x = parse_double(fields[i], where);
      if (!std::isfinite(x)) throw Error(ErrorCode::ParseError, where + ": non-finite component");
      v.push_back(x);
    }
    if (p.dimension_ == 0) {
      p.dimension_ = v.size();
    } else if (v.size() != p.dimension_) {
      throw Error(ErrorCode::DimensionMismatch, where + ": dimension " + std::to_string(v.size()) +
                                                    ", expected " + std::to_string(p.dimension_));
    }
    p.table_[textcore::normalize(fields[0])] = std::move(v);
  }
  if (p.table_.empty()) throw Error(ErrorCode::ParseError, path.string() + ": empty embedding store");
  return p;
}

}  // namespace paratask::embed
