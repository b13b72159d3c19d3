#include "paratask/embed/provider.hpp"

#include <cstdlib>

#include "paratask/common/error.hpp"
#include "paratask/common/number_format.hpp"

namespace paratask::embed {

EmbeddingProviderConfig EmbeddingProviderConfig::parse(std::string_view spec) {
  EmbeddingProviderConfig cfg;
  const auto colon = spec.find(':');
  const auto kind = spec.substr(0, colon);
  const auto arg = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);

  if (kind == "builtin") {
    cfg.kind = Kind::Builtin;
    if (!arg.empty()) {
      auto dim = parse_integer(arg, "--embedder builtin dimension");
      if (dim <= 0) throw Error(ErrorCode::InvalidArgument, "builtin dimension must be positive");
      cfg.builtin.dimension = static_cast<std::size_t>(dim);
    }
  } else if (kind == "precomputed") {
    if (arg.empty()) throw Error(ErrorCode::InvalidArgument, "precomputed embedder needs a path");
    cfg.kind = Kind::Precomputed;
    cfg.store = std::string(arg);
  } else if (kind == "remote") {
    cfg.kind = Kind::Remote;
    if (!arg.empty()) {
      cfg.remote.url = std::string(arg);
    } else if (const char* env = std::getenv(kEmbedderUrlEnv); env && *env) {
      cfg.remote.url = env;
    } else {
      throw Error(ErrorCode::InvalidArgument,
                  std::string("remote embedder needs a URL or ") + kEmbedderUrlEnv);
    }
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown embedder '" + std::string(spec) + "'");
  }
  return cfg;
}

std::unique_ptr<EmbeddingProvider> make_provider(const EmbeddingProviderConfig& config) {
  switch (config.kind) {
    case EmbeddingProviderConfig::Kind::Builtin:
      return std::make_unique<BuiltinProvider>(config.builtin);
    case EmbeddingProviderConfig::Kind::Precomputed:
      return std::make_unique<PrecomputedProvider>(load_precomputed(config.store));
    case EmbeddingProviderConfig::Kind::Remote:
      return std::make_unique<RemoteProvider>(config.remote);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown embedder kind");
}

}  // namespace paratask::embed
