#include "paratask/embed/provider.hpp"

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include <cmath>
#include <json.hpp>

#include "paratask/common/error.hpp"

namespace paratask::embed {
namespace {

using json = nlohmann::json;

}  // namespace

RemoteProvider::RemoteProvider(RemoteConfig config) : config_(std::move(config)) {
  const auto scheme_end = config_.url.find("://");
  if (scheme_end == std::string::npos)
    throw Error(ErrorCode::InvalidArgument, "remote embedder URL needs a scheme: " + config_.url);
  const auto scheme = config_.url.substr(0, scheme_end);
  if (scheme != "http" && scheme != "https")
    throw Error(ErrorCode::InvalidArgument, "unsupported scheme in " + config_.url);
  const auto path_start = config_.url.find('/', scheme_end + 3);
  if (path_start == std::string::npos) {
    scheme_host_port_ = config_.url;
    path_ = "/embed";
  } else {
    scheme_host_port_ = config_.url.substr(0, path_start);
    path_ = config_.url.substr(path_start);
  }
  if (config_.batch_size == 0) throw Error(ErrorCode::InvalidArgument, "batch size must be positive");
}

std::string RemoteProvider::id() const { return "remote:" + config_.url; }

std::size_t RemoteProvider::dimension() const {
  std::lock_guard lock(mutex_);
  return dimension_;
}

std::vector<std::vector<double>> RemoteProvider::request_batch(
    std::span<const std::string> texts) const {
  httplib::Client client(scheme_host_port_);
  const auto secs = std::chrono::duration_cast<std::chrono::seconds>(config_.timeout);
  const auto usecs = std::chrono::duration_cast<std::chrono::microseconds>(config_.timeout - secs);
  client.set_connection_timeout(secs.count(), usecs.count());
  client.set_read_timeout(secs.count(), usecs.count());
  client.set_write_timeout(secs.count(), usecs.count());

  const std::string body = json{{"texts", std::vector<std::string>(texts.begin(), texts.end())}}.dump();

  httplib::Result res;
  for (unsigned attempt = 0; attempt <= config_.max_retries; ++attempt) {
    res = client.Post(path_, body, "application/json");
    if (res) break;
  }
  if (!res) {
    throw Error(ErrorCode::RemoteUnavailable,
                config_.url + ": " + httplib::to_string(res.error()) + " after " +
                    std::to_string(config_.max_retries + 1) + " attempt(s)");
  }
  if (res->status != 200) {
    throw Error(ErrorCode::RemoteUnavailable,
                config_.url + " answered HTTP " + std::to_string(res->status));
  }

  json doc;
  try {
    doc = json::parse(res->body);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::RemoteUnavailable, config_.url + ": malformed response: " + e.what());
  }
  if (!doc.is_object() || !doc.contains("embeddings") || !doc["embeddings"].is_array() ||
      !doc.contains("dim") || !doc["dim"].is_number_integer()) {
    throw Error(ErrorCode::RemoteUnavailable, config_.url + ": response lacks embeddings/dim");
  }
  const auto dim = doc["dim"].get<long long>();
  const auto& rows = doc["embeddings"];
  if (rows.size() != texts.size()) {
    throw Error(ErrorCode::DimensionMismatch, config_.url + ": " + std::to_string(rows.size()) +
                                                  " embeddings for " +
                                                  std::to_string(texts.size()) + " texts");
  }
  std::vector<std::vector<double>> out;
  out.reserve(rows.size());
  for (const auto& row : rows) {
    if (!row.is_array() || static_cast<long long>(row.size()) != dim || dim <= 0) {
      throw Error(ErrorCode::DimensionMismatch,
                  config_.url + ": embedding length disagrees with dim " + std::to_string(dim));
    }
    std::vector<double> v;
    v.reserve(row.size());
    for (const auto& x : row) {
      if (!x.is_number() || !std::isfinite(x.get<double>()))
        throw Error(ErrorCode::RemoteUnavailable, config_.url + ": non-numeric embedding value");
      v.push_back(x.get<double>());
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Embedding> RemoteProvider::embed_texts(std::span<const std::string> texts) const {
  std::vector<Embedding> out;
  out.reserve(texts.size());
  const std::string provider = id();
  for (std::size_t start = 0; start < texts.size(); start += config_.batch_size) {
    const auto count = std::min(config_.batch_size, texts.size() - start);
    auto batch = request_batch(texts.subspan(start, count));
    {
      std::lock_guard lock(mutex_);
      const std::size_t dim = batch.front().size();
      if (dimension_ == 0) {
        dimension_ = dim;
      } else if (dim != dimension_) {
        throw Error(ErrorCode::DimensionMismatch,
                    config_.url + ": dimension changed from " + std::to_string(dimension_) +
                        " to " + std::to_string(dim));
      }
    }
    for (auto& v : batch) out.push_back({std::move(v), provider});
  }
  return out;
}

}  // namespace paratask::embed
