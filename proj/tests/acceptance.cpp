// Acceptance checks. Prints one verdict line per criterion; with a numeric
// argument runs only that criterion and exits non-zero if it fails.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "oracles.hpp"
#include "paratask/cli/manifest.hpp"
#include "paratask/cli/run.hpp"
#include "paratask/common/number_format.hpp"
#include "paratask/corpusio/annotation.hpp"
#include "paratask/corpusio/pair_file.hpp"
#include "paratask/embed/provider.hpp"
#include "paratask/evalkit/confusion.hpp"
#include "paratask/evalkit/cross_validate.hpp"
#include "paratask/evalkit/distribution.hpp"
#include "paratask/evalkit/kfold.hpp"
#include "paratask/featurize/schema.hpp"
#include "paratask/featurize/vectorize.hpp"
#include "paratask/forest/random_forest.hpp"
#include "paratask/postag/tagger.hpp"
#include "paratask/simmetrics/similarity.hpp"
#include "paratask/textcore/text.hpp"

namespace fs = std::filesystem;
namespace oracle = paratask::oracle;
using json = nlohmann::json;
using paratask::textcore::TaskLabel;
using Clock = std::chrono::steady_clock;

namespace {

const fs::path kMini = fs::path(PARATASK_DATA_DIR) / "minicorpora";

// Collects failed sub-checks of one criterion.
struct Verdict {
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  void check(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  void note(const std::string& s) { notes.push_back(s); }
  bool passed() const { return failures.empty(); }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

class ScratchDir {
 public:
  ScratchDir() {
    std::random_device rd;
    path_ = fs::temp_directory_path() / ("paratask-acceptance-" + std::to_string(rd()) + std::to_string(rd()));
    fs::create_directories(path_);
  }
  ~ScratchDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  std::string operator/(const std::string& rel) const { return (path_ / rel).string(); }

 private:
  fs::path path_;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult cli(std::vector<std::string> args) {
  args.insert(args.begin(), "paratask");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = paratask::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

bool cli_ok(Verdict& v, const std::vector<std::string>& args) {
  auto r = cli(args);
  v.check(r.code == 0, args.front() + " exited " + std::to_string(r.code) + ": " + r.err);
  return r.code == 0;
}

std::vector<std::string> descriptors(const fs::path& dir, bool labeled) {
  std::vector<std::string> out;
  for (const auto& e : fs::directory_iterator(dir)) {
    const auto name = e.path().filename().string();
    if (name.find(".descriptor.json") == std::string::npos) continue;
    if ((name.rfind("general_", 0) == 0) == labeled) continue;
    out.push_back(e.path().string());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> ingest_args(const std::vector<std::string>& descs, const std::string& out) {
  std::vector<std::string> a{"ingest"};
  for (const auto& d : descs) {
    a.push_back("--descriptor");
    a.push_back(d);
  }
  a.push_back("--out");
  a.push_back(out);
  return a;
}

// ---------------------------------------------------------------- 1

Verdict metric_oracles() {
  Verdict v;
  const auto t0 = Clock::now();
  std::mt19937 rng(20240601);
  std::uniform_int_distribution<std::size_t> len(1, 20);
  std::uniform_int_distribution<int> word(0, 7);
  double worst = 0;
  for (int i = 0; i < 100; ++i) {
    oracle::Tokens a, b;
    const auto la = len(rng), lb = len(rng);
    for (std::size_t k = 0; k < la; ++k) a.push_back("w" + std::to_string(word(rng)));
    for (std::size_t k = 0; k < lb; ++k) b.push_back("w" + std::to_string(word(rng)));
    const double r = paratask::simmetrics::rouge1_f(a, b);
    const double s = paratask::simmetrics::bleu_sym(a, b);
    const double ro = oracle::oracle_rouge1(a, b);
    const double so = (oracle::oracle_bleu(a, b) + oracle::oracle_bleu(b, a)) / 2;
    worst = std::max({worst, std::abs(r - ro), std::abs(s - so)});
  }
  const double secs = seconds_since(t0);
  v.check(worst <= 1e-9, "max deviation " + std::to_string(worst));
  v.check(secs < 5.0, "took " + std::to_string(secs) + " s");
  std::ostringstream dev;
  dev << std::scientific << std::setprecision(2) << worst;
  v.note("100 pairs, max |lib - oracle| = " + dev.str() + ", " + paratask::format_fixed(secs, 3) + " s");
  return v;
}

// ---------------------------------------------------------------- 2

using paratask::FeatureMatrix;
namespace forest = paratask::forest;

std::size_t tree_oracle_mismatches(std::uint32_t seed) {
  std::mt19937 rng(seed);
  const std::size_t n = 10 + rng() % 191, width = 1 + rng() % 3;
  const int classes = 2 + static_cast<int>(rng() % 4);
  std::uniform_int_distribution<int> val(0, 7), cls(0, classes - 1);
  FeatureMatrix x(width);
  std::vector<TaskLabel> y;
  std::vector<std::vector<double>> rows;
  std::vector<int> labels;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> r(width);
    for (auto& f : r) f = val(rng) * 0.25;
    const int c = cls(rng);
    x.add_row(r);
    rows.push_back(r);
    labels.push_back(c);
    y.push_back(static_cast<TaskLabel>(c));
  }
  std::vector<std::uint32_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<std::uint32_t>(i);
  forest::TreeParams p;
  p.max_depth = 1000;
  forest::Rng trng(seed);
  auto tree = forest::DecisionTree::train(x, y, all, p, trng);

  std::size_t bad = 0;
  std::function<void(std::int32_t, const std::vector<std::size_t>&)> walk = [&](std::int32_t id,
                                                                                const std::vector<std::size_t>& reach) {
    const auto& node = tree.nodes()[static_cast<std::size_t>(id)];
    std::vector<std::vector<double>> r;
    std::vector<int> l;
    for (auto i : reach) {
      r.push_back(rows[i]);
      l.push_back(labels[i]);
    }
    auto best = oracle::oracle_best_split(r, l);
    if (node.is_leaf()) {
      bad += !(oracle::oracle_gini(l) == 0.0 || !best);
      return;
    }
    if (!best || best->feature != static_cast<std::size_t>(node.feature) ||
        std::abs(best->threshold - node.threshold) > 1e-12) {
      ++bad;
      return;
    }
    std::vector<std::size_t> left, right;
    for (auto i : reach) (rows[i][static_cast<std::size_t>(node.feature)] <= node.threshold ? left : right).push_back(i);
    walk(node.left, left);
    walk(node.right, right);
  };
  std::vector<std::size_t> everything(n);
  for (std::size_t i = 0; i < n; ++i) everything[i] = i;
  walk(0, everything);
  return bad;
}

Verdict forest_correctness() {
  Verdict v;
  std::size_t bad = 0;
  for (std::uint32_t seed = 1; seed <= 40; ++seed) bad += tree_oracle_mismatches(seed);
  v.check(bad == 0, std::to_string(bad) + " tree nodes disagree with the exhaustive oracle");
  v.note("40 random trees checked node by node");

  // Five well-separated Gaussian blobs in 8 dimensions.
  std::mt19937 rng(77);
  std::normal_distribution<double> noise(0.0, 1.0);
  const std::size_t dims = 8;
  std::vector<std::vector<double>> centers(5, std::vector<double>(dims));
  for (std::size_t c = 0; c < 5; ++c)
    for (std::size_t d = 0; d < dims; ++d) centers[c][d] = (d % 5 == c) ? 4.0 : 0.0;
  FeatureMatrix x(dims);
  std::vector<TaskLabel> y;
  for (std::size_t i = 0; i < 2000; ++i) {
    const auto c = i % 5;
    std::vector<double> r(dims);
    for (std::size_t d = 0; d < dims; ++d) r[d] = centers[c][d] + noise(rng);
    x.add_row(r);
    y.push_back(static_cast<TaskLabel>(c));
  }
  const auto t0 = Clock::now();
  auto cv = paratask::evalkit::cross_validate(x, y, "gaussian", forest::ForestParams{}, 5, 42, 1);
  const double secs = seconds_since(t0);
  v.check(cv.pooled.micro_f1 >= 0.95, "Gaussian 5-fold micro-F1 " + std::to_string(cv.pooled.micro_f1));
  v.check(secs < 60.0, "Gaussian 5-fold took " + std::to_string(secs) + " s");
  v.note("Gaussian 2000 points 5-fold micro-F1 " + paratask::format_fixed(cv.pooled.micro_f1, 4) + " in " +
         paratask::format_fixed(secs, 1) + " s");
  return v;
}

// ---------------------------------------------------------------- 3

Verdict determinism() {
  Verdict v;
  ScratchDir dir;
  if (!cli_ok(v, ingest_args(descriptors(kMini, true), dir / "ingest"))) return v;
  if (!cli_ok(v, {"sample", "-i", dir / "ingest/pairs.jsonl", "--per-task", "100", "--out", dir / "sample"})) return v;
  if (!cli_ok(v, {"featurize", "-i", dir / "sample/sample.jsonl", "--out", dir / "feat"})) return v;
  const std::vector<std::string> jobs{"1", "1", "2", "4"};
  std::set<std::string> models, predictions;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    const auto m = dir / ("model" + std::to_string(i)), p = dir / ("pred" + std::to_string(i));
    if (!cli_ok(v, {"train", "-i", dir / "feat/features.tsv", "--seed", "9", "--trees", "30", "--jobs", jobs[i],
                    "--out", m}))
      return v;
    if (!cli_ok(v, {"profile", "-i", dir / "feat/features.tsv", "--model", m + "/model.ptrf", "--jobs", jobs[i],
                    "--out", p}))
      return v;
    models.insert(slurp(m + "/model.ptrf"));
    predictions.insert(slurp(p + "/predictions.tsv"));
  }
  v.check(models.size() == 1, "model files differ across runs");
  v.check(predictions.size() == 1, "predictions differ across runs");
  v.note("4 train runs (--jobs 1, 1, 2, 4): " + std::to_string(models.size()) + " distinct model file(s), " +
         std::to_string(predictions.size()) + " distinct prediction file(s)");
  return v;
}

// ---------------------------------------------------------------- 4

Verdict evaluation_identities() {
  Verdict v;
  std::mt19937 rng(4);
  std::size_t bad_f1 = 0;
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = 1 + rng() % 200;
    std::vector<TaskLabel> a(n), p(n);
    for (std::size_t i = 0; i < n; ++i) {
      a[i] = static_cast<TaskLabel>(rng() % 5);
      p[i] = rng() % 3 == 0 ? a[i] : static_cast<TaskLabel>(rng() % 5);
    }
    auto s = paratask::evalkit::confusion_stats(a, p);
    const double want = static_cast<double>(s.matrix.trace()) / static_cast<double>(s.matrix.total());
    bad_f1 += std::abs(s.micro_f1 - want) > 1e-12 || s.matrix.total() != n;
  }
  v.check(bad_f1 == 0, std::to_string(bad_f1) + " inputs where micro-F1 != trace/total");

  std::size_t bad_folds = 0;
  for (int t = 0; t < 200; ++t) {
    std::vector<TaskLabel> y;
    for (std::size_t c = 0; c < 5; ++c)
      for (std::size_t i = 0, m = 5 + rng() % 60; i < m; ++i) y.push_back(static_cast<TaskLabel>(c));
    std::shuffle(y.begin(), y.end(), rng);
    auto folds = paratask::evalkit::stratified_kfold(y, 5, static_cast<std::uint64_t>(t));
    std::vector<int> seen(y.size(), 0);
    bool ok = folds.size() == 5;
    std::array<std::pair<std::size_t, std::size_t>, 5> range;
    range.fill({SIZE_MAX, 0});
    for (const auto& f : folds) {
      std::array<std::size_t, 5> per{};
      for (auto i : f) {
        ++seen[i];
        ++per[paratask::textcore::code(y[i])];
      }
      for (std::size_t c = 0; c < 5; ++c) {
        range[c].first = std::min(range[c].first, per[c]);
        range[c].second = std::max(range[c].second, per[c]);
      }
    }
    ok &= std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; });
    for (const auto& [lo, hi] : range) ok &= hi - lo <= 1;
    bad_folds += !ok;
  }
  v.check(bad_folds == 0, std::to_string(bad_folds) + " fold partitions violate disjoint/covering/balanced");
  v.note("1000 confusion inputs, 200 five-fold partitions");
  return v;
}

// ---------------------------------------------------------------- 5

Verdict pipeline() {
  Verdict v;
  ScratchDir dir;
  const auto t0 = Clock::now();
  if (!cli_ok(v, ingest_args(descriptors(kMini, true), dir / "ingest"))) return v;
  if (!cli_ok(v, {"sample", "-i", dir / "ingest/pairs.jsonl", "--per-task", "500", "--out", dir / "sample"})) return v;
  if (!cli_ok(v, {"featurize", "-i", dir / "sample/sample.jsonl", "--out", dir / "feat"})) return v;
  if (!cli_ok(v, {"train", "-i", dir / "feat/features.tsv", "--out", dir / "model"})) return v;
  if (!cli_ok(v, {"evaluate", "-i", dir / "feat/features.tsv", "--cv", "5", "--out", dir / "eval"})) return v;
  if (!cli_ok(v, ingest_args(descriptors(kMini, false), dir / "general"))) return v;
  if (!cli_ok(v, {"profile", "-i", dir / "general/pairs.jsonl", "--schema", dir / "feat/schema.txt", "--model",
                  dir / "model/model.ptrf", "--out", dir / "profile"}))
    return v;
  const double secs = seconds_since(t0);
  v.check(secs < 300.0, "pipeline took " + std::to_string(secs) + " s");

  auto metrics = json::parse(slurp(dir / "eval/metrics.json"));
  const auto& counts = metrics["pooled"]["confusion_matrix"]["counts"];
  v.check(counts.size() == 5 && counts[0].size() == 5, "confusion matrix is not 5x5");
  v.check(metrics["rows"] == 2500, "expected 2500 evaluated pairs");
  v.check(fs::file_size(dir / "eval/confusion.txt") > 0, "confusion.txt empty");

  auto dist = json::parse(slurp(dir / "profile/distribution.json"));
  std::size_t rows_checked = 0;
  for (const auto& d : dist["datasets"]) {
    double pct = 0;
    std::uint64_t count = 0;
    for (const auto& [task, cell] : d["tasks"].items()) {
      pct += cell["percentage"].get<double>();
      count += cell["count"].get<std::uint64_t>();
    }
    v.check(std::abs(pct - 100.0) <= 0.1, d["dataset"].get<std::string>() + " percentages sum to " + std::to_string(pct));
    v.check(count == d["total"].get<std::uint64_t>(), d["dataset"].get<std::string>() + " counts do not sum to total");
    ++rows_checked;
  }
  v.check(rows_checked == 2, "expected two profiled datasets");

  // Reference row shape: counts of 5,801 pairs rendered at one decimal.
  auto row = paratask::evalkit::make_distribution_row("MSRPC", {390, 1858, 2241, 653, 659});
  const std::vector<std::string> expected{"6.7", "32.0", "38.6", "11.4", "11.4"};
  std::string got;
  for (auto t : paratask::textcore::kAllTasks) {
    const auto text = row.percentage_text(t);
    got += (got.empty() ? "" : ", ") + text;
    v.check(text == expected[paratask::textcore::code(t)],
            "reference row: " + std::string(paratask::textcore::task_name(t)) + " renders " + text + "% (" +
                std::to_string(row.counts[paratask::textcore::code(t)]) + "/5801), expected " +
                expected[paratask::textcore::code(t)] + "%");
  }
  v.check(row.total == 5801, "reference row total");
  v.note("chain ran in " + paratask::format_fixed(secs, 1) + " s, micro-F1 " +
         paratask::format_fixed(metrics["micro_f1"].get<double>(), 4) + "; reference row renders (" + got + ")");
  return v;
}

// ---------------------------------------------------------------- 6

Verdict replication() {
  Verdict v;
  using paratask::cli::replication_check;
  // Flag logic: only the full protocol with a remote embedder is judged.
  v.check(!replication_check(0.5, "builtin:x", 50000, 10)["applicable"].get<bool>(), "builtin embedder judged");
  v.check(!replication_check(0.5, "remote:u", 2500, 10)["applicable"].get<bool>(), "small sample judged");
  v.check(!replication_check(0.5, "remote:u", 50000, 9)["applicable"].get<bool>(), "nine datasets judged");
  v.check(replication_check(0.69, "remote:u", 50000, 10)["deviation"].get<bool>(), "0.69 not flagged");
  v.check(replication_check(0.91, "remote:u", 50000, 10)["deviation"].get<bool>(), "0.91 not flagged");
  v.check(!replication_check(0.82, "remote:u", 50000, 10)["deviation"].get<bool>(), "0.82 flagged");

  const char* url = std::getenv(paratask::embed::kEmbedderUrlEnv);
  const char* corpora = std::getenv("PARATASK_PROTOCOL_DIR");
  if (!url || !*url || !corpora || !*corpora) {
    v.note("flag logic verified; full protocol not run (set PARATASK_PROTOCOL_DIR to the ten corpus descriptors "
           "and PARATASK_EMBEDDER_URL to an embedding service)");
    return v;
  }
  ScratchDir dir;
  if (!cli_ok(v, ingest_args(descriptors(corpora, true), dir / "ingest"))) return v;
  if (!cli_ok(v, {"sample", "-i", dir / "ingest/pairs.jsonl", "--per-task", "10000", "--out", dir / "sample"})) return v;
  if (!cli_ok(v, {"featurize", "-i", dir / "sample/sample.jsonl", "--embedder", "remote", "--out", dir / "feat"}))
    return v;
  if (!cli_ok(v, {"evaluate", "-i", dir / "feat/features.tsv", "--cv", "5", "--out", dir / "eval"})) return v;
  auto rep = json::parse(slurp(dir / "eval/manifest.json"))["replication"];
  v.check(rep["applicable"].get<bool>(), "protocol run not recognised as applicable");
  v.check(rep["within_band"].get<bool>(), "micro-F1 " + rep["micro_f1"].dump() + " outside [0.70, 0.90]");
  v.note("full protocol micro-F1 " + rep["micro_f1"].dump());
  return v;
}

// ---------------------------------------------------------------- 7

Verdict annotation() {
  Verdict v;
  ScratchDir dir;
  if (!cli_ok(v, ingest_args(descriptors(kMini, true), dir / "ingest"))) return v;
  if (!cli_ok(v, {"annotate-sample", "-i", dir / "ingest/pairs.jsonl", "--out", dir / "a"})) return v;
  if (!cli_ok(v, {"annotate-sample", "-i", dir / "ingest/pairs.jsonl", "--out", dir / "b"})) return v;
  if (!cli_ok(v, {"annotate-sample", "-i", dir / "ingest/pairs.jsonl", "--seed", "7", "--out", dir / "c"})) return v;

  std::ifstream key_in(dir / "a/key.csv");
  auto key = paratask::corpusio::read_key_csv(key_in);
  std::ifstream sheet_in(dir / "a/sheet.csv");
  auto sheet = paratask::corpusio::read_filled_sheet(sheet_in);
  v.check(sheet.size() == 500, "sheet has " + std::to_string(sheet.size()) + " rows");
  v.check(key.size() == 500, "key has " + std::to_string(key.size()) + " rows");

  std::map<std::string, paratask::textcore::ParaphrasePair> by_id;
  for (auto& p : paratask::corpusio::load_pairs(dir / "ingest/pairs.jsonl")) by_id[p.id] = p;
  std::map<TaskLabel, std::size_t> per_task;
  std::map<std::string, std::size_t> per_dataset;
  std::size_t out_of_window = 0;
  for (const auto& k : key) {
    ++per_task[k.task];
    ++per_dataset[k.dataset];
    const auto& p = by_id.at(k.pair_id);
    for (const auto* t : {&p.text_a, &p.text_b}) {
      const auto n = paratask::textcore::char_length(*t);
      out_of_window += n < 100 || n > 180;
    }
  }
  for (auto t : paratask::textcore::kAllTasks)
    v.check(per_task[t] == 100, std::string(paratask::textcore::task_name(t)) + " has " + std::to_string(per_task[t]));
  for (const auto& [ds, n] : per_dataset) v.check(n == 50, ds + " has " + std::to_string(n));
  v.check(per_dataset.size() == 10, "expected ten datasets on the sheet");
  v.check(out_of_window == 0, std::to_string(out_of_window) + " texts outside [100, 180] characters");
  v.check(slurp(dir / "a/sheet.csv") == slurp(dir / "b/sheet.csv"), "same seed gave a different sheet");
  v.check(slurp(dir / "a/sheet.csv") != slurp(dir / "c/sheet.csv"), "different seed gave the same sheet");

  // Perfectly filled sheet.
  std::ofstream filled(dir / "filled.csv");
  filled << "blinded_id,annotation\n";
  for (const auto& k : key) filled << k.blinded_id << ',' << paratask::textcore::task_name(k.task) << '\n';
  filled.close();
  if (!cli_ok(v, {"annotate-score", "-i", dir / "filled.csv", "--key", dir / "a/key.csv", "--out", dir / "score"}))
    return v;
  auto score = json::parse(slurp(dir / "score/score.json"));
  const auto& m = score["confusion_matrix"]["counts"];
  std::uint64_t off = 0, diag = 0;
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < m[r].size(); ++c) (r == c ? diag : off) += m[r][c].get<std::uint64_t>();
  v.check(off == 0 && diag == 500, "perfect sheet: diagonal " + std::to_string(diag) + ", off-diagonal " + std::to_string(off));
  v.note("500 rows, 100 per task, 50 per dataset, all texts in [100, 180], diagonal " + std::to_string(diag));
  return v;
}

// ---------------------------------------------------------------- 8

Verdict swap_invariance() {
  Verdict v;
  namespace fz = paratask::featurize;
  const std::vector<std::string> words{"the", "a", "dog", "runs", "quickly", "over", "green", "hills", "she",
                                       "said", "that", "prices", "rose", "3.5", "1,000", "well-known", ",",
                                       ".", "and", "in", "very", "happy", "nation's", "(", ")", "is"};
  std::mt19937 rng(8);
  std::uniform_int_distribution<std::size_t> len(1, 20), pick(0, words.size() - 1);
  auto text = [&] {
    std::string s;
    for (std::size_t i = 0, n = len(rng); i < n; ++i) s += (i ? " " : "") + words[pick(rng)];
    return paratask::textcore::normalize(s);
  };
  std::vector<paratask::textcore::ParaphrasePair> pairs, swapped;
  for (int i = 0; i < 1000; ++i) {
    auto a = text(), b = text();
    pairs.push_back({"r:" + std::to_string(i), a, b, std::nullopt, "random"});
    swapped.push_back({"r:" + std::to_string(i), b, a, std::nullopt, "random"});
  }
  paratask::embed::BuiltinProvider emb;
  const auto& tagger = paratask::postag::CascadeTagger::bundled();
  auto schema = fz::build_schema(pairs, 5, tagger, emb.id());
  auto fa = fz::vectorize_pairs(schema, pairs, emb, tagger);
  auto fb = fz::vectorize_pairs(schema, swapped, emb, tagger);
  std::size_t differ = 0;
  for (std::size_t i = 0; i < fa.size(); ++i) differ += !(fa[i] == fb[i]);
  v.check(differ == 0, std::to_string(differ) + " pairs change under swap");

  FeatureMatrix xa(schema.width()), xb(schema.width());
  std::vector<TaskLabel> y;
  for (std::size_t i = 0; i < fa.size(); ++i) {
    xa.add_row(fa[i].values);
    xb.add_row(fb[i].values);
    y.push_back(static_cast<TaskLabel>(rng() % 5));
  }
  forest::ForestParams p;
  p.num_trees = 25;
  auto model = forest::train_forest(xa, y, schema.hash(), p, 3);
  auto pa = forest::predict_batch(model, xa, schema.hash());
  auto pb = forest::predict_batch(model, xb, schema.hash());
  v.check(pa == pb, "predictions change under swap");
  v.note("1000 random pairs, width " + std::to_string(schema.width()) + ", " + std::to_string(differ) +
         " vectors differ");
  return v;
}

const std::vector<std::pair<std::string, std::function<Verdict()>>>& criteria() {
  static const std::vector<std::pair<std::string, std::function<Verdict()>>> list{
      {"metric oracle equivalence", metric_oracles},
      {"forest correctness", forest_correctness},
      {"determinism across --jobs", determinism},
      {"evaluation identities", evaluation_identities},
      {"end-to-end pipeline and report format", pipeline},
      {"replication band (conditional)", replication},
      {"annotation protocol", annotation},
      {"swap invariance", swap_invariance},
  };
  return list;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::size_t> which;
  if (argc > 1) {
    which.push_back(std::strtoul(argv[1], nullptr, 10));
  } else {
    for (std::size_t i = 1; i <= criteria().size(); ++i) which.push_back(i);
  }
  int failed = 0;
  for (auto n : which) {
    if (n < 1 || n > criteria().size()) {
      std::cerr << "no criterion " << n << '\n';
      return 2;
    }
    const auto& [name, fn] = criteria()[n - 1];
    Verdict v;
    try {
      v = fn();
    } catch (const std::exception& e) {
      v.check(false, std::string("exception: ") + e.what());
    }
    std::cout << "criterion " << n << " " << (v.passed() ? "PASS" : "FAIL") << ": " << name;
    for (const auto& s : v.notes) std::cout << "; " << s;
    std::cout << '\n';
    for (const auto& f : v.failures) std::cout << "    failed: " << f << '\n';
    failed += !v.passed();
  }
  return failed == 0 ? 0 : 1;
}
