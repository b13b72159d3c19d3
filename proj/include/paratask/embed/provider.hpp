#pragma once

#include <chrono>
#include <cstddef>
#include <filesystem>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace paratask::embed {

struct Embedding {
  std::vector<double> values;
  std::string provider;

  std::size_t dimension() const noexcept { return values.size(); }
};

// Sentence-embedding source. Implementations are safe for concurrent
// embed_texts calls. Every embedding from one provider shares one dimension.
class EmbeddingProvider {
 public:
  virtual ~EmbeddingProvider() = default;

  // Stable identifier recorded in feature schemas; features built with
  // different providers are not comparable.
  virtual std::string id() const = 0;

  // One embedding per input text, in input order. Texts are expected to be
  // normalized.
  virtual std::vector<Embedding> embed_texts(std::span<const std::string> texts) const = 0;
};

struct BuiltinConfig {
  std::size_t dimension = 256;
  std::size_t min_order = 3;
  std::size_t max_order = 5;
};

// Hashed character n-gram term frequencies. The lowercased text is wrapped in
// '<' and '>' so even one-character texts yield a 3-gram; each n-gram's UTF-8
// bytes go through 64-bit FNV-1a and land in bucket hash % dimension; the count
// vector is L2-normalized. An empty text gives the zero vector.
class BuiltinProvider final : public EmbeddingProvider {
 public:
  explicit BuiltinProvider(BuiltinConfig config = {});

  std::string id() const override;
  std::vector<Embedding> embed_texts(std::span<const std::string> texts) const override;

  // Raw bucket counts before normalization.
  std::vector<double> bucket_counts(std::string_view text) const;

  const BuiltinConfig& config() const noexcept { return config_; }

 private:
  BuiltinConfig config_;
};

// Exact-text lookup into a store file: one record per line, the text, a tab,
// then the vector components separated by tabs.
class PrecomputedProvider final : public EmbeddingProvider {
 public:
  std::string id() const override;
  std::vector<Embedding> embed_texts(std::span<const std::string> texts) const override;

  std::size_t size() const noexcept { return table_.size(); }
  std::size_t dimension() const noexcept { return dimension_; }

 private:
  friend PrecomputedProvider load_precomputed(const std::filesystem::path& path);
  std::unordered_map<std::string, std::vector<double>> table_;
  std::size_t dimension_ = 0;
};

// Throws IoError, ParseError or DimensionMismatch. Keys are normalized on load.
PrecomputedProvider load_precomputed(const std::filesystem::path& path);

struct RemoteConfig {
  std::string url;  // http(s)://host[:port][/path]; path defaults to /embed
  std::chrono::milliseconds timeout{10000};
  std::size_t batch_size = 64;
  unsigned max_retries = 2;  // extra attempts after a transport failure
};

// Client for an HTTP embedding service. Request: POST {"texts": [...]};
// response {"embeddings": [[...], ...], "dim": n}. Anything but status 200, or
// a transport failure after the retry budget, raises RemoteUnavailable.
class RemoteProvider final : public EmbeddingProvider {
 public:
  explicit RemoteProvider(RemoteConfig config);

  std::string id() const override;
  std::vector<Embedding> embed_texts(std::span<const std::string> texts) const override;

  // 0 until the first successful response.
  std::size_t dimension() const;

 private:
  std::vector<std::vector<double>> request_batch(std::span<const std::string> texts) const;

  RemoteConfig config_;
  std::string scheme_host_port_;
  std::string path_;
  mutable std::mutex mutex_;
  mutable std::size_t dimension_ = 0;
};

struct EmbeddingProviderConfig {
  enum class Kind { Builtin, Precomputed, Remote };

  Kind kind = Kind::Builtin;
  BuiltinConfig builtin;
  std::filesystem::path store;
  RemoteConfig remote;

  // "builtin", "builtin:DIM", "precomputed:PATH", "remote:URL" or "remote"
  // (URL from the PARATASK_EMBEDDER_URL environment variable).
  static EmbeddingProviderConfig parse(std::string_view spec);
};

inline constexpr const char* kEmbedderUrlEnv = "PARATASK_EMBEDDER_URL";

std::unique_ptr<EmbeddingProvider> make_provider(const EmbeddingProviderConfig& config);

}  // namespace paratask::embed
