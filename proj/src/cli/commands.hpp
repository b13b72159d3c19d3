#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace paratask::cli {

inline constexpr std::uint64_t kDefaultSeed = 42;

struct Options {
  std::vector<std::string> inputs;
  std::vector<std::string> descriptors;
  std::string out;
  std::uint64_t seed = kDefaultSeed;
  bool force = false;
  unsigned jobs = 0;  // 0: hardware concurrency

  // featurize
  std::size_t min_count = 5;
  std::string embedder = "builtin";
  std::string schema;

  // train / evaluate
  std::size_t trees = 100;
  std::size_t max_depth = 15;
  std::size_t min_samples_split = 2;
  std::size_t cv = 0;
  bool holdout = false;
  std::string model;

  // sample / annotate-sample
  std::size_t per_task = 0;  // 0: command default
  std::size_t min_chars = 100;
  std::size_t max_chars = 180;
  std::size_t bins = 8;
  std::string length_policy = "per-text";

  // annotate-score
  std::string key;

  // taxonomy / report
  std::string taxonomy_class;
  std::string parent;
  std::string format = "table";
};

struct Streams {
  std::ostream& out;
  std::ostream& err;
};

void cmd_ingest(const Options& o, Streams io);
void cmd_sample(const Options& o, Streams io);
void cmd_featurize(const Options& o, Streams io);
void cmd_train(const Options& o, Streams io);
void cmd_evaluate(const Options& o, Streams io);
void cmd_profile(const Options& o, Streams io);
void cmd_report(const Options& o, Streams io);
void cmd_annotate_sample(const Options& o, Streams io);
void cmd_annotate_score(const Options& o, Streams io);
void cmd_taxonomy(const Options& o, Streams io);

}  // namespace paratask::cli
