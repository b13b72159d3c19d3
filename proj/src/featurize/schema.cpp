#include "paratask/featurize/schema.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "paratask/common/csv.hpp"
#include "paratask/common/error.hpp"
#include "paratask/common/hashing.hpp"
#include "paratask/common/number_format.hpp"
#include "paratask/postag/ngram_profile.hpp"

namespace paratask::featurize {

using postag::kMaxNgramOrder;
using postag::PosNgram;

namespace {

constexpr std::string_view kMagic = "paratask-feature-schema";

}  // namespace

FeatureSchema::FeatureSchema(std::array<std::vector<PosNgram>, kMaxNgramOrder> vocab,
                             std::size_t min_count, std::string tagger_version,
                             std::string provider_id)
    : vocab_(std::move(vocab)),
      min_count_(min_count),
      tagger_version_(std::move(tagger_version)),
      provider_id_(std::move(provider_id)) {
  std::size_t next = 0;
  for (std::size_t n = 0; n < kMaxNgramOrder; ++n) {
    auto& v = vocab_[n];
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    for (const auto& g : v) {
      if (g.order != n + 1) {
        throw Error(ErrorCode::InvalidArgument,
                    "n-gram '" + g.to_string() + "' filed under order " + std::to_string(n + 1));
      }
      slots_[g] = next++;
    }
  }
  hash_ = sha256_hex(body());
}

std::size_t FeatureSchema::vocab_size() const noexcept { return slots_.size(); }

long FeatureSchema::slot(const PosNgram& gram) const {
  auto it = slots_.find(gram);
  return it == slots_.end() ? -1 : static_cast<long>(it->second);
}

std::string FeatureSchema::feature_name(std::size_t index) const {
  if (index < kNumScalarFeatures) return std::string(kScalarFeatureNames[index]);
  std::size_t rel = index - kNumScalarFeatures;
  const std::size_t v = vocab_size();
  const char* block = rel < v ? "diff:" : "mean:";
  rel %= v == 0 ? 1 : v;
  for (const auto& order : vocab_) {
    if (rel < order.size()) return block + order[rel].to_string();
    rel -= order.size();
  }
  return "invalid";
}

std::string FeatureSchema::body() const {
  std::ostringstream out;
  out << kMagic << '\t' << version_ << '\n';
  out << "min_count\t" << min_count_ << '\n';
  out << "tagger\t" << tagger_version_ << '\n';
  out << "embedder\t" << provider_id_ << '\n';
  for (auto name : kScalarFeatureNames) out << "scalar\t" << name << '\n';
  for (std::size_t n = 0; n < kMaxNgramOrder; ++n)
    for (const auto& g : vocab_[n]) out << "ngram\t" << (n + 1) << '\t' << g.to_string() << '\n';
  return out.str();
}

std::string FeatureSchema::serialize() const {
  // The hash line goes second so the hashed body is everything else verbatim.
  std::string b = body();
  auto first_nl = b.find('\n');
  return b.substr(0, first_nl + 1) + "hash\t" + hash_ + "\n" + b.substr(first_nl + 1);
}

FeatureSchema FeatureSchema::deserialize(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& why) -> Error {
    return Error(ErrorCode::ParseError, "schema line " + std::to_string(line_no) + ": " + why);
  };

  std::string stored_hash;
  std::size_t min_count = 0;
  std::string tagger, embedder;
  std::vector<std::string> scalars;
  std::array<std::vector<PosNgram>, kMaxNgramOrder> vocab;
  int version = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    auto f = csv::split_tsv(line);
    const auto& key = f[0];
    if (line_no == 1) {
      if (key != kMagic || f.size() != 2) throw fail("not a feature schema file");
      version = static_cast<int>(parse_integer(f[1], "schema version"));
      if (version != kSchemaVersion) {
        throw Error(ErrorCode::VersionMismatch,
                    "schema version " + f[1] + ", expected " + std::to_string(kSchemaVersion));
      }
      continue;
    }
    if (key == "hash" && f.size() == 2) {
      stored_hash = f[1];
    } else if (key == "min_count" && f.size() == 2) {
      min_count = static_cast<std::size_t>(parse_integer(f[1], "schema min_count"));
    } else if (key == "tagger" && f.size() == 2) {
      tagger = f[1];
    } else if (key == "embedder" && f.size() == 2) {
      embedder = f[1];
    } else if (key == "scalar" && f.size() == 2) {
      scalars.push_back(f[1]);
    } else if (key == "ngram" && f.size() == 3) {
      auto order = parse_integer(f[1], "schema n-gram order");
      auto gram = PosNgram::parse(f[2]);
      if (!gram || gram->order != order) throw fail("bad n-gram '" + f[2] + "'");
      vocab[static_cast<std::size_t>(order - 1)].push_back(*gram);
    } else {
      throw fail("unexpected record '" + key + "'");
    }
  }
  if (version == 0) throw Error(ErrorCode::ParseError, "empty schema file");
  if (scalars != std::vector<std::string>(kScalarFeatureNames.begin(), kScalarFeatureNames.end()))
    throw Error(ErrorCode::SchemaMismatch, "schema scalar features differ from this build");
  FeatureSchema schema(std::move(vocab), min_count, tagger, embedder);
  if (schema.hash() != stored_hash) {
    throw Error(ErrorCode::SchemaMismatch,
                "schema hash " + stored_hash + " does not match contents (" + schema.hash() + ")");
  }
  return schema;
}

void FeatureSchema::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  out << serialize();
  if (!out) throw Error(ErrorCode::IoError, "failed writing " + path.string());
}

FeatureSchema FeatureSchema::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return deserialize(ss.str());
}

FeatureSchema build_schema(std::span<const textcore::ParaphrasePair> pairs, std::size_t min_count,
                           const postag::Tagger& tagger, std::string provider_id) {
  if (pairs.empty()) throw Error(ErrorCode::EmptyCorpus, "cannot build a schema from zero pairs");
  if (min_count == 0) throw Error(ErrorCode::InvalidArgument, "min_count must be at least 1");

  std::map<PosNgram, std::size_t> doc_freq;
  for (const auto& pair : pairs) {
    std::set<PosNgram> seen;
    for (const auto* text : {&pair.text_a, &pair.text_b}) {
      auto tags = tagger.tag(textcore::tokenize(*text));
      for (const auto& order : postag::distinct_ngrams(tags)) seen.insert(order.begin(), order.end());
    }
    for (const auto& g : seen) ++doc_freq[g];
  }

  std::array<std::vector<PosNgram>, kMaxNgramOrder> vocab;
  for (const auto& [gram, df] : doc_freq)
    if (df >= min_count) vocab[gram.order - 1].push_back(gram);
  return FeatureSchema(std::move(vocab), min_count, tagger.version(), std::move(provider_id));
}

}  // namespace paratask::featurize
