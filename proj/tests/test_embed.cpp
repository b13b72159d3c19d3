#include <gtest/gtest.h>
#define CPPHTTPLIB_OPENSSL_SUPPORT  // must match the library build
#include <httplib.h>

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <json.hpp>
#include <thread>

#include "paratask/embed/provider.hpp"
#include "paratask/simmetrics/similarity.hpp"
#include "support.hpp"

namespace paratask::embed {
namespace {

using json = nlohmann::json;

// Independent FNV-1a so the bucket oracle does not reuse library code.
std::uint64_t fnv(const std::string& s) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

TEST(Builtin, DeterministicAndUnitNorm) {
  BuiltinProvider p;
  std::vector<std::string> texts{"A man rides a horse.", "A man rides a horse."};
  auto e = p.embed_texts(texts);
  ASSERT_EQ(e.size(), 2u);
  EXPECT_EQ(e[0].values, e[1].values);
  EXPECT_EQ(e[0].dimension(), 256u);
  EXPECT_EQ(simmetrics::cosine_sim(e[0].values, e[1].values), 1.0);
  double sq = 0;
  for (double x : e[0].values) sq += x * x;
  EXPECT_NEAR(sq, 1.0, 1e-12);
  EXPECT_EQ(p.id(), "builtin:fnv1a64-char3-5-d256");
}

TEST(Builtin, ShortTextHandHashedAtDimension8) {
  BuiltinProvider p({8, 3, 5});
  // "Ab" lowercases and pads to "<ab>": 3-grams "<ab", "ab>", 4-gram "<ab>".
  std::vector<double> expected(8, 0.0);
  for (std::string g : {"<ab", "ab>", "<ab>"}) expected[fnv(g) % 8] += 1.0;
  EXPECT_EQ(p.bucket_counts("Ab"), expected);

  double norm = 0;
  for (double x : expected) norm += x * x;
  norm = std::sqrt(norm);
  auto e = p.embed_texts(std::vector<std::string>{"Ab"});
  for (std::size_t i = 0; i < 8; ++i) EXPECT_NEAR(e[0].values[i], expected[i] / norm, 1e-15);
}

TEST(Builtin, SingleCharacterStillHasATrigram) {
  BuiltinProvider p({8, 3, 5});
  auto counts = p.bucket_counts("x");
  std::vector<double> expected(8, 0.0);
  expected[fnv("<x>") % 8] = 1.0;
  EXPECT_EQ(counts, expected);
}

TEST(Builtin, MultibyteGramsFollowCodePoints) {
  BuiltinProvider p({16, 3, 3});
  // "é" is one code point: "<é>" is a single 3-gram.
  std::vector<double> expected(16, 0.0);
  expected[fnv("<\xC3\xA9>") % 16] = 1.0;
  EXPECT_EQ(p.bucket_counts("\xC3\x89"), expected);  // "É" lowercases first
}

TEST(Precomputed, LoadsAndLooksUp) {
  test::TempDir dir;
  auto path = dir.write("store.tsv", "hello world\t1\t0\t0\t0\nsecond\t0\t1\t0\t0\n");
  auto store = load_precomputed(path);
  EXPECT_EQ(store.size(), 2u);
  EXPECT_EQ(store.dimension(), 4u);
  auto e = store.embed_texts(std::vector<std::string>{"second"});
  EXPECT_EQ(e[0].values, (std::vector<double>{0, 1, 0, 0}));
  EXPECT_EQ(store.id(), "precomputed:d4");
  EXPECT_PT_ERROR(store.embed_texts(std::vector<std::string>{"absent"}), ErrorCode::MissingEmbedding);
}

TEST(Precomputed, MixedDimensionsRejected) {
  test::TempDir dir;
  auto path = dir.write("store.tsv", "a\t1\t2\t3\t4\nb\t1\t2\t3\t4\t5\n");
  EXPECT_PT_ERROR(load_precomputed(path), ErrorCode::DimensionMismatch);
  auto bad = dir.write("bad.tsv", "a\t1\tx\n");
  EXPECT_PT_ERROR(load_precomputed(bad), ErrorCode::ParseError);
}

TEST(ProviderConfig, ParsesSpecs) {
  auto b = EmbeddingProviderConfig::parse("builtin:64");
  EXPECT_EQ(b.kind, EmbeddingProviderConfig::Kind::Builtin);
  EXPECT_EQ(b.builtin.dimension, 64u);
  auto p = EmbeddingProviderConfig::parse("precomputed:/tmp/x.tsv");
  EXPECT_EQ(p.kind, EmbeddingProviderConfig::Kind::Precomputed);
  EXPECT_EQ(p.store, "/tmp/x.tsv");
  auto r = EmbeddingProviderConfig::parse("remote:http://127.0.0.1:9/embed");
  EXPECT_EQ(r.kind, EmbeddingProviderConfig::Kind::Remote);
  EXPECT_EQ(r.remote.url, "http://127.0.0.1:9/embed");
  EXPECT_PT_ERROR(EmbeddingProviderConfig::parse("word2vec"), ErrorCode::InvalidArgument);
}

TEST(ProviderConfig, RemoteUrlFallsBackToEnvironment) {
  ::setenv(kEmbedderUrlEnv, "http://127.0.0.1:1234", 1);
  auto r = EmbeddingProviderConfig::parse("remote");
  ::unsetenv(kEmbedderUrlEnv);
  EXPECT_EQ(r.remote.url, "http://127.0.0.1:1234");
  EXPECT_PT_ERROR(EmbeddingProviderConfig::parse("remote"), ErrorCode::InvalidArgument);
}

// Mock embedding service on an ephemeral port.
class MockServer {
 public:
  MockServer() {
    server_.Post("/embed", [this](const httplib::Request& req, httplib::Response& res) {
      ++requests_;
      if (delay_ms_ > 0) std::this_thread::sleep_for(std::chrono::milliseconds(delay_ms_));
      if (status_ != 200) {
        res.status = status_;
        return;
      }
      auto texts = json::parse(req.body).at("texts");
      json rows = json::array();
      for (const auto& t : texts) {
        const auto s = t.get<std::string>();
        rows.push_back({static_cast<double>(s.size()), 1.0, -0.5});
      }
      if (wrong_dim_) rows[0].push_back(9.0);
      res.set_content(json{{"embeddings", rows}, {"dim", 3}}.dump(), "application/json");
    });
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }
  ~MockServer() {
    server_.stop();
    thread_.join();
  }

  std::string url() const { return "http://127.0.0.1:" + std::to_string(port_); }
  int requests() const { return requests_; }
  void set_status(int s) { status_ = s; }
  void set_delay_ms(int ms) { delay_ms_ = ms; }
  void set_wrong_dim(bool w) { wrong_dim_ = w; }

 private:
  httplib::Server server_;
  std::thread thread_;
  int port_ = 0;
  std::atomic<int> requests_{0};
  std::atomic<int> status_{200};
  std::atomic<int> delay_ms_{0};
  std::atomic<bool> wrong_dim_{false};
};

TEST(Remote, EmbeddingsEqualMockPayloadAcrossBatches) {
  MockServer mock;
  RemoteConfig cfg;
  cfg.url = mock.url();  // no path: defaults to /embed
  cfg.batch_size = 2;
  RemoteProvider p(cfg);
  std::vector<std::string> texts{"a", "bb", "ccc", "dddd", "eeeee"};
  auto e = p.embed_texts(texts);
  ASSERT_EQ(e.size(), 5u);
  for (std::size_t i = 0; i < texts.size(); ++i) {
    EXPECT_EQ(e[i].values, (std::vector<double>{static_cast<double>(i + 1), 1.0, -0.5}));
    EXPECT_EQ(e[i].provider, "remote:" + mock.url());
  }
  EXPECT_EQ(mock.requests(), 3);
  EXPECT_EQ(p.dimension(), 3u);
}

TEST(Remote, NonOkStatusIsUnavailableWithoutRetry) {
  MockServer mock;
  mock.set_status(503);
  RemoteConfig cfg;
  cfg.url = mock.url() + "/embed";
  RemoteProvider p(cfg);
  EXPECT_PT_ERROR(p.embed_texts(std::vector<std::string>{"x"}), ErrorCode::RemoteUnavailable);
  EXPECT_EQ(mock.requests(), 1);
}

TEST(Remote, TimeoutsRetryUpToTheBound) {
  MockServer mock;
  mock.set_delay_ms(600);
  RemoteConfig cfg;
  cfg.url = mock.url();
  cfg.timeout = std::chrono::milliseconds(150);
  cfg.max_retries = 2;
  RemoteProvider p(cfg);
  EXPECT_PT_ERROR(p.embed_texts(std::vector<std::string>{"x"}), ErrorCode::RemoteUnavailable);
  // Requests may still be in flight server-side; give them a moment to land.
  std::this_thread::sleep_for(std::chrono::milliseconds(700));
  EXPECT_EQ(mock.requests(), 3);
}

TEST(Remote, InconsistentDimensionRejected) {
  MockServer mock;
  mock.set_wrong_dim(true);
  RemoteConfig cfg;
  cfg.url = mock.url();
  RemoteProvider p(cfg);
  EXPECT_PT_ERROR(p.embed_texts(std::vector<std::string>{"x", "y"}), ErrorCode::DimensionMismatch);
}

TEST(Remote, UnreachableServerIsUnavailable) {
  RemoteConfig cfg;
  cfg.url = "http://127.0.0.1:1";
  cfg.timeout = std::chrono::milliseconds(200);
  cfg.max_retries = 1;
  RemoteProvider p(cfg);
  EXPECT_PT_ERROR(p.embed_texts(std::vector<std::string>{"x"}), ErrorCode::RemoteUnavailable);
}

}  // namespace
}  // namespace paratask::embed
