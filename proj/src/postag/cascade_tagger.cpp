#include "paratask/postag/tagger.hpp"

#include <unicode/uchar.h>
#include <unicode/utf8.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "paratask/common/csv.hpp"
#include "paratask/common/error.hpp"
#include "paratask/common/hashing.hpp"
#include "paratask/common/number_format.hpp"

namespace paratask::embedded {
extern const std::string_view lexicon_tsv;
extern const std::string_view suffix_rules_tsv;
}

namespace paratask::postag {
namespace {

struct ParsedTable {
  int version = 0;
  std::vector<std::pair<std::size_t, std::vector<std::string>>> rows;  // line, fields
};

ParsedTable parse_table(std::string_view text, std::string_view what, std::size_t fields) {
  ParsedTable t;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.rfind("# version\t", 0) == 0) {
      t.version = static_cast<int>(parse_integer(line.substr(10), what));
      continue;
    }
    if (line[0] == '#') continue;
    auto f = csv::split_tsv(line);
    if (f.size() != fields) {
      throw Error(ErrorCode::ParseError, std::string(what) + " line " +
                                             std::to_string(line_no) + ": expected " +
                                             std::to_string(fields) + " fields");
    }
    t.rows.emplace_back(line_no, std::move(f));
  }
  if (t.version <= 0) throw Error(ErrorCode::ParseError, std::string(what) + " lacks a version line");
  return t;
}

PosTag require_tag(std::string_view name, std::string_view what, std::size_t line) {
  auto tag = parse_pos_tag(name);
  if (!tag) {
    throw Error(ErrorCode::ParseError, std::string(what) + " line " + std::to_string(line) +
                                           ": unknown tag '" + std::string(name) + "'");
  }
  return *tag;
}

std::vector<UChar32> code_points(std::string_view s) {
  std::vector<UChar32> out;
  const auto* p = reinterpret_cast<const uint8_t*>(s.data());
  int32_t i = 0;
  const int32_t n = static_cast<int32_t>(s.size());
  while (i < n) {
    UChar32 c;
    U8_NEXT(p, i, n, c);
    out.push_back(c < 0 ? 0xFFFD : c);
  }
  return out;
}

bool is_punctuation(const std::vector<UChar32>& cps) {
  return !cps.empty() && std::all_of(cps.begin(), cps.end(), [](UChar32 c) { return u_ispunct(c); });
}

// Digits with optional sign, separators and a trailing percent: "3.5",
// "1,000", "-2", "12/05", "5:30", "40%".
bool is_numeric(const std::vector<UChar32>& cps) {
  bool digit = false;
  for (std::size_t i = 0; i < cps.size(); ++i) {
    UChar32 c = cps[i];
    if (u_isdigit(c)) {
      digit = true;
    } else if (c == '.' || c == ',' || c == '/' || c == ':' || c == '-') {
      if (i == 0 && c != '-' && c != '.') return false;
    } else if (c == '+' && i == 0) {
    } else if (c == '%' && i + 1 == cps.size()) {
    } else {
      return false;
    }
  }
  return digit;
}

std::string short_hash(std::string_view text) { return sha256_hex(text).substr(0, 12); }

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

CascadeTagger::CascadeTagger(std::string_view lexicon_tsv, std::string_view suffix_rules_tsv) {
  auto lex = parse_table(lexicon_tsv, "lexicon", 2);
  for (auto& [line, f] : lex.rows) {
    PosTag tag = require_tag(f[1], "lexicon", line);
    if (!lexicon_.emplace(f[0], tag).second) {
      throw Error(ErrorCode::ParseError,
                  "lexicon line " + std::to_string(line) + ": duplicate word '" + f[0] + "'");
    }
  }
  auto suf = parse_table(suffix_rules_tsv, "suffix rules", 3);
  for (auto& [line, f] : suf.rows) {
    auto min_stem = parse_integer(f[2], "suffix rules");
    if (f[0].empty() || min_stem < 0)
      throw Error(ErrorCode::ParseError, "suffix rules line " + std::to_string(line));
    rules_.push_back({f[0], require_tag(f[1], "suffix rules", line),
                      static_cast<std::size_t>(min_stem)});
  }
  // Longest suffix first; file order breaks ties.
  std::stable_sort(rules_.begin(), rules_.end(), [](const SuffixRule& a, const SuffixRule& b) {
    return textcore::char_length(a.suffix) > textcore::char_length(b.suffix);
  });
  version_ = "cascade-v1/lexicon-v" + std::to_string(lex.version) + "-" +
             short_hash(lexicon_tsv) + "/suffix-v" + std::to_string(suf.version) + "-" +
             short_hash(suffix_rules_tsv);
}

const CascadeTagger& CascadeTagger::bundled() {
  static const CascadeTagger tagger(embedded::lexicon_tsv, embedded::suffix_rules_tsv);
  return tagger;
}

CascadeTagger CascadeTagger::from_files(const std::filesystem::path& lexicon,
                                        const std::filesystem::path& suffix_rules) {
  return CascadeTagger(read_file(lexicon), read_file(suffix_rules));
}

PosTag CascadeTagger::tag_form(std::string_view form) const {
  auto cps = code_points(form);
  if (is_punctuation(cps)) return PosTag::PUNCT;
  if (is_numeric(cps)) return PosTag::NUM;
  if (auto it = lexicon_.find(std::string(form)); it != lexicon_.end()) return it->second;
  if (std::none_of(cps.begin(), cps.end(), [](UChar32 c) { return u_isalpha(c); }))
    return PosTag::X;
  const std::size_t len = cps.size();
  for (const auto& rule : rules_) {
    if (form.size() < rule.suffix.size() || !form.ends_with(rule.suffix)) continue;
    if (len - textcore::char_length(rule.suffix) >= rule.min_stem) return rule.tag;
  }
  return PosTag::NOUN;
}

std::vector<PosTag> CascadeTagger::tag(const textcore::TokenSequence& tokens) const {
  std::vector<PosTag> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens.tokens) out.push_back(tag_form(t.form));
  return out;
}

}  // namespace paratask::postag
