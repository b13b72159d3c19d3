#include "paratask/forest/model_io.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <iterator>

#include "paratask/common/error.hpp"
#include "paratask/common/hashing.hpp"

namespace paratask::forest {
namespace {

constexpr char kMagic[4] = {'P', 'T', 'R', 'F'};
constexpr std::size_t kChecksumSize = 64;  // hex SHA-256

class Writer {
 public:
  void bytes(const void* p, std::size_t n) {
    const auto* b = static_cast<const std::uint8_t*>(p);
    out_.insert(out_.end(), b, b + n);
  }
  void u8(std::uint8_t v) { out_.push_back(v); }
  void u32(std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  void u64(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) out_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  void i32(std::int32_t v) { u32(static_cast<std::uint32_t>(v)); }
  void f64(double v) { u64(std::bit_cast<std::uint64_t>(v)); }

  std::vector<std::uint8_t>& buffer() { return out_; }

 private:
  std::vector<std::uint8_t> out_;
};

class Reader {
 public:
  explicit Reader(std::span<const std::uint8_t> in) : in_(in) {}

  void need(std::size_t n) const {
    if (pos_ + n > in_.size()) throw Error(ErrorCode::CorruptModel, "model file truncated");
  }
  std::uint8_t u8() {
    need(1);
    return in_[pos_++];
  }
  std::uint32_t u32() {
    need(4);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(in_[pos_++]) << (8 * i);
    return v;
  }
  std::uint64_t u64() {
    need(8);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(in_[pos_++]) << (8 * i);
    return v;
  }
  std::int32_t i32() { return static_cast<std::int32_t>(u32()); }
  double f64() { return std::bit_cast<double>(u64()); }
  std::string str(std::size_t n) {
    need(n);
    std::string s(reinterpret_cast<const char*>(in_.data() + pos_), n);
    pos_ += n;
    return s;
  }
  bool at_end() const { return pos_ == in_.size(); }

 private:
  std::span<const std::uint8_t> in_;
  std::size_t pos_ = 0;
};

std::uint32_t checked_u32(std::size_t v, const char* what) {
  if (v > UINT32_MAX) throw Error(ErrorCode::InvalidArgument, std::string(what) + " too large");
  return static_cast<std::uint32_t>(v);
}

}  // namespace

std::vector<std::uint8_t> serialize_model(const ForestModel& model) {
  Writer w;
  w.bytes(kMagic, sizeof kMagic);
  w.u32(kModelFormatVersion);
  w.u32(static_cast<std::uint32_t>(textcore::kNumTasks));
  w.u64(model.seed());
  const auto& p = model.params();
  w.u32(checked_u32(model.trees().size(), "tree count"));
  w.u32(checked_u32(p.max_depth, "max_depth"));
  w.u32(checked_u32(p.min_samples_split, "min_samples_split"));
  w.u32(checked_u32(p.features_per_split, "features_per_split"));
  w.u8(p.bootstrap ? 1 : 0);
  w.u32(checked_u32(model.width(), "width"));
  w.u32(checked_u32(model.schema_hash().size(), "schema hash"));
  w.bytes(model.schema_hash().data(), model.schema_hash().size());
  for (const auto& tree : model.trees()) {
    w.u32(checked_u32(tree.nodes().size(), "node count"));
    for (const auto& n : tree.nodes()) {
      w.i32(n.feature);
      w.f64(n.threshold);
      w.i32(n.left);
      w.i32(n.right);
      for (auto c : n.counts) w.u32(c);
    }
  }
  auto& buf = w.buffer();
  const std::string sum = sha256_hex(std::span<const std::uint8_t>(buf));
  buf.insert(buf.end(), sum.begin(), sum.end());
  return std::move(buf);
}

ForestModel deserialize_model(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 8 || std::memcmp(bytes.data(), kMagic, sizeof kMagic) != 0)
    throw Error(ErrorCode::CorruptModel, "not a paratask model file");
  {
    Reader head(bytes.subspan(4, 4));
    const auto version = head.u32();
    if (version != kModelFormatVersion) {
      throw Error(ErrorCode::VersionMismatch, "model format version " + std::to_string(version) +
                                                  ", expected " +
                                                  std::to_string(kModelFormatVersion));
    }
  }
  if (bytes.size() < 8 + kChecksumSize) throw Error(ErrorCode::CorruptModel, "model file truncated");
  const auto body = bytes.first(bytes.size() - kChecksumSize);
  const std::string stored(reinterpret_cast<const char*>(bytes.data() + body.size()), kChecksumSize);
  if (sha256_hex(body) != stored) throw Error(ErrorCode::CorruptModel, "model checksum mismatch");

  Reader r(body.subspan(8));
  if (r.u32() != textcore::kNumTasks) throw Error(ErrorCode::CorruptModel, "unexpected class count");
  const auto seed = r.u64();
  ForestParams p;
  const auto num_trees = r.u32();
  p.num_trees = num_trees;
  p.max_depth = r.u32();
  p.min_samples_split = r.u32();
  p.features_per_split = r.u32();
  p.bootstrap = r.u8() != 0;
  const auto width = r.u32();
  const auto hash = r.str(r.u32());

  std::vector<DecisionTree> trees;
  trees.reserve(num_trees);
  for (std::uint32_t t = 0; t < num_trees; ++t) {
    const auto count = r.u32();
    r.need(static_cast<std::size_t>(count) * 40);
    std::vector<TreeNode> nodes(count);
    for (auto& n : nodes) {
      n.feature = r.i32();
      n.threshold = r.f64();
      n.left = r.i32();
      n.right = r.i32();
      for (auto& c : n.counts) c = r.u32();
      if (n.feature >= static_cast<std::int32_t>(width))
        throw Error(ErrorCode::CorruptModel, "split feature beyond model width");
    }
    trees.emplace_back(std::move(nodes));
  }
  if (!r.at_end()) throw Error(ErrorCode::CorruptModel, "trailing bytes after last tree");
  try {
    return ForestModel(std::move(trees), p, seed, hash, width);
  } catch (const Error& e) {
    throw Error(ErrorCode::CorruptModel, e.message());
  }
}

void save_model(const ForestModel& model, const std::filesystem::path& path) {
  const auto bytes = serialize_model(model);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(ErrorCode::IoError, "failed writing " + path.string());
}

ForestModel load_model(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return deserialize_model(bytes);
}

}  // namespace paratask::forest
