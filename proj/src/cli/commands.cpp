#include "commands.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <set>
#include <thread>

#include "paratask/cli/manifest.hpp"
#include "paratask/common/csv.hpp"
#include "paratask/common/error.hpp"
#include "paratask/common/matrix.hpp"
#include "paratask/common/number_format.hpp"
#include "paratask/corpusio/annotation.hpp"
#include "paratask/corpusio/descriptor.hpp"
#include "paratask/corpusio/ingest.hpp"
#include "paratask/corpusio/pair_file.hpp"
#include "paratask/corpusio/sampling.hpp"
#include "paratask/embed/provider.hpp"
#include "paratask/evalkit/cross_validate.hpp"
#include "paratask/evalkit/distribution.hpp"
#include "paratask/featurize/feature_file.hpp"
#include "paratask/featurize/schema.hpp"
#include "paratask/featurize/vectorize.hpp"
#include "paratask/forest/model_io.hpp"
#include "paratask/postag/tagger.hpp"
#include "paratask/textcore/taxonomy.hpp"

namespace paratask::cli {
namespace {

namespace fs = std::filesystem;
using ojson = nlohmann::ordered_json;
using textcore::TaskLabel;

unsigned resolve_jobs(unsigned jobs) {
  if (jobs > 0) return jobs;
  return std::max(1u, std::thread::hardware_concurrency());
}

const std::string& single_input(const Options& o, const char* what) {
  if (o.inputs.size() != 1)
    throw Error(ErrorCode::InvalidArgument, std::string("expected exactly one --input ") + what);
  return o.inputs.front();
}

template <typename Fn>
void write_file(const fs::path& path, Fn&& fn) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  fn(out);
  out.close();
  if (!out) throw Error(ErrorCode::IoError, "write failed: " + path.string());
}

void write_text(const fs::path& path, const std::string& text) {
  write_file(path, [&](std::ostream& out) { out << text; });
}

void echo_common(Manifest& m, const Options& o) {
  auto& c = m.config();
  if (!o.inputs.empty()) c["inputs"] = o.inputs;
  c["seed"] = o.seed;
  c["jobs"] = o.jobs;
  c["force"] = o.force;
}

std::vector<textcore::ParaphrasePair> load_all_pairs(const Options& o, Manifest& m) {
  if (o.inputs.empty()) throw Error(ErrorCode::InvalidArgument, "at least one --input pair file is required");
  std::vector<textcore::ParaphrasePair> pairs;
  for (const auto& in : o.inputs) {
    auto part = corpusio::load_pairs(in);
    m.add_input(in);
    pairs.insert(pairs.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return pairs;
}

struct LabeledData {
  FeatureMatrix x;
  std::vector<TaskLabel> y;
  std::set<std::string> datasets;
};

LabeledData labeled_rows(const featurize::FeatureTable& table) {
  LabeledData d{FeatureMatrix(table.width), {}, {}};
  for (const auto& row : table.rows) {
    if (!row.label || *row.label == TaskLabel::Unknown) continue;
    d.x.add_row(row.values);
    d.y.push_back(*row.label);
    d.datasets.insert(row.dataset);
  }
  return d;
}

void check_schema(const featurize::FeatureSchema& schema, const featurize::FeatureTable& table) {
  if (schema.hash() != table.schema_hash) {
    throw Error(ErrorCode::SchemaMismatch, "feature file was built with schema " + table.schema_hash +
                                               ", but --schema has hash " + schema.hash());
  }
}

ojson forest_config(const forest::ForestParams& p) {
  return {{"trees", p.num_trees},
          {"max_depth", p.max_depth},
          {"min_samples_split", p.min_samples_split},
          {"features_per_split", p.features_per_split == 0 ? ojson("ceil(sqrt(width))") : ojson(p.features_per_split)},
          {"bootstrap", p.bootstrap}};
}

forest::ForestParams forest_params(const Options& o) {
  forest::ForestParams p;
  p.num_trees = o.trees;
  p.max_depth = o.max_depth;
  p.min_samples_split = o.min_samples_split;
  return p;
}

std::unique_ptr<embed::EmbeddingProvider> provider_from(const Options& o) {
  return embed::make_provider(embed::EmbeddingProviderConfig::parse(o.embedder));
}

void write_predictions(const fs::path& path, const featurize::FeatureTable& table,
                       std::span<const TaskLabel> predicted) {
  write_file(path, [&](std::ostream& out) {
    out << "id\tdataset\tpredicted\n";
    for (std::size_t i = 0; i < table.rows.size(); ++i)
      out << table.rows[i].id << '\t' << table.rows[i].dataset << '\t' << textcore::task_name(predicted[i]) << '\n';
  });
}

std::vector<evalkit::DatasetPrediction> read_predictions(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  std::string line;
  std::size_t n = 0;
  std::vector<evalkit::DatasetPrediction> preds;
  while (std::getline(in, line)) {
    ++n;
    if (n == 1 || line.empty()) continue;  // header
    auto f = csv::split_tsv(line);
    auto task = f.size() == 3 ? textcore::parse_task_label(f[2]) : std::nullopt;
    if (!task || *task == TaskLabel::Unknown) {
      throw Error(ErrorCode::ParseError, path.string() + ":" + std::to_string(n) +
                                             ": expected id<TAB>dataset<TAB>task");
    }
    preds.push_back({f[1], *task});
  }
  return preds;
}

// Writes the distribution report as text, CSV and JSON.
void save_distribution(OutputDir& dir, Manifest& m, const evalkit::DistributionReport& report) {
  auto txt = dir.claim("distribution.txt");
  auto csv_path = dir.claim("distribution.csv");
  auto json_path = dir.claim("distribution.json");
  write_text(txt, report.render_table());
  write_file(csv_path, [&](std::ostream& out) { report.write_csv(out); });
  write_text(json_path, report.to_json().dump(2) + "\n");
  for (const auto& p : {txt, csv_path, json_path}) m.add_output(p);
}

void print_distribution(std::ostream& out, const evalkit::DistributionReport& report,
                        const std::string& format) {
  if (format == "csv") {
    report.write_csv(out);
  } else if (format == "json") {
    out << report.to_json().dump(2) << '\n';
  } else {
    out << report.render_table();
  }
}

}  // namespace

void cmd_ingest(const Options& o, Streams io) {
  if (o.descriptors.empty()) throw Error(ErrorCode::InvalidArgument, "at least one --descriptor is required");
  OutputDir dir(o.out, o.force);
  auto pairs_path = dir.claim("pairs.jsonl");
  auto report_path = dir.claim("ingest_report.json");
  auto manifest_path = dir.claim("manifest.json");

  Manifest m("ingest");
  echo_common(m, o);
  m.config()["descriptors"] = o.descriptors;
  std::vector<textcore::ParaphrasePair> all;
  ojson report = ojson::object();
  for (const auto& path : o.descriptors) {
    auto d = corpusio::load_descriptor(path);
    m.add_input(path);
    for (const auto& data : d.paths) m.add_input(data);
    auto result = corpusio::ingest(d);
    const auto& s = result.stats;
    io.err << "ingest " << d.name << ": " << s.records << " records, " << s.kept << " kept, "
           << s.dropped << " dropped, " << s.filtered << " filtered\n";
    ojson drops = ojson::array();
    for (const auto& dr : result.dropped) drops.push_back({{"line", dr.line}, {"reason", dr.reason}});
    report[d.name] = {{"format", corpusio::format_name(d.format)},
                      {"records", s.records},
                      {"kept", s.kept},
                      {"dropped", s.dropped},
                      {"filtered", s.filtered},
                      {"drops", drops}};
    all.insert(all.end(), std::make_move_iterator(result.pairs.begin()),
               std::make_move_iterator(result.pairs.end()));
  }
  if (all.empty()) throw Error(ErrorCode::EmptyCorpus, "no pairs survived ingestion");
  corpusio::save_pairs(pairs_path, all);
  write_text(report_path, report.dump(2) + "\n");
  m.section("ingest") = report;
  for (auto& d : m.section("ingest")) d.erase("drops");
  m.add_output(pairs_path);
  m.add_output(report_path);
  m.save(manifest_path);
  io.out << "wrote " << all.size() << " pairs to " << pairs_path.string() << '\n';
}

void cmd_sample(const Options& o, Streams io) {
  OutputDir dir(o.out, o.force);
  auto sample_path = dir.claim("sample.jsonl");
  auto manifest_path = dir.claim("manifest.json");
  Manifest m("sample");
  echo_common(m, o);
  const std::size_t per_task = o.per_task ? o.per_task : 10000;
  m.config()["per_task"] = per_task;

  auto pairs = load_all_pairs(o, m);
  corpusio::SampleSummary summary;
  auto sample = corpusio::sample_training_set(pairs, per_task, o.seed, &summary);
  corpusio::save_pairs(sample_path, sample);
  m.section("sample") = summary.drawn;
  m.add_output(sample_path);
  m.save(manifest_path);
  io.out << "sampled " << sample.size() << " pairs (" << per_task << " per task) to "
         << sample_path.string() << '\n';
}

void cmd_featurize(const Options& o, Streams io) {
  OutputDir dir(o.out, o.force);
  auto features_path = dir.claim("features.tsv");
  const bool build = o.schema.empty();
  fs::path schema_path = build ? dir.claim("schema.txt") : fs::path(o.schema);
  auto manifest_path = dir.claim("manifest.json");

  Manifest m("featurize");
  echo_common(m, o);
  m.config()["embedder"] = o.embedder;
  m.config()["min_count"] = o.min_count;
  if (!build) m.config()["schema"] = o.schema;

  auto pairs = load_all_pairs(o, m);
  if (pairs.empty()) throw Error(ErrorCode::EmptyCorpus, "no pairs to featurize");
  const auto& tagger = postag::CascadeTagger::bundled();
  auto provider = provider_from(o);

  featurize::FeatureSchema schema;
  if (build) {
    schema = featurize::build_schema(pairs, o.min_count, tagger, provider->id());
  } else {
    schema = featurize::FeatureSchema::load(schema_path);
    m.add_input(schema_path);
  }
  auto vectors = featurize::vectorize_pairs(schema, pairs, *provider, tagger, resolve_jobs(o.jobs));

  featurize::FeatureTable table{schema.hash(), schema.width(), {}};
  table.rows.reserve(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    table.rows.push_back({pairs[i].id, pairs[i].dataset, pairs[i].gold_task, std::move(vectors[i].values)});
  }
  if (build) {
    schema.save(schema_path);
    m.add_output(schema_path);
  }
  featurize::save_feature_table(features_path, table);
  m.add_output(features_path);
  m.versions()["tagger"] = tagger.version();
  m.versions()["embedder"] = provider->id();
  m.versions()["schema_hash"] = schema.hash();
  m.versions()["schema_version"] = schema.version();
  m.section("features") = {{"rows", table.rows.size()}, {"width", table.width},
                           {"pos_vocabulary", schema.vocab_size()}};
  m.save(manifest_path);
  io.out << "featurized " << table.rows.size() << " pairs, width " << table.width << ", schema "
         << schema.hash() << '\n';
}

void cmd_train(const Options& o, Streams io) {
  const auto& input = single_input(o, "feature file");
  OutputDir dir(o.out, o.force);
  auto model_path = dir.claim("model.ptrf");
  auto manifest_path = dir.claim("manifest.json");

  Manifest m("train");
  echo_common(m, o);
  const auto params = forest_params(o);
  m.config()["forest"] = forest_config(params);

  auto table = featurize::load_feature_table(input);
  m.add_input(input);
  if (!o.schema.empty()) {
    check_schema(featurize::FeatureSchema::load(o.schema), table);
    m.config()["schema"] = o.schema;
    m.add_input(o.schema);
  }
  auto data = labeled_rows(table);
  if (data.y.empty()) throw Error(ErrorCode::EmptyTrainingSet, "feature file has no labeled rows");
  auto model = forest::train_forest(data.x, data.y, table.schema_hash, params, o.seed, resolve_jobs(o.jobs));
  forest::save_model(model, model_path);
  m.add_output(model_path);
  m.versions()["model_format"] = forest::kModelFormatVersion;
  m.versions()["schema_hash"] = table.schema_hash;
  m.section("training") = {{"rows", data.y.size()}, {"width", table.width}};
  m.save(manifest_path);
  io.out << "trained " << params.num_trees << " trees on " << data.y.size() << " rows -> "
         << model_path.string() << '\n';
}

void cmd_evaluate(const Options& o, Streams io) {
  const auto& input = single_input(o, "feature file");
  const int modes = (o.cv > 0) + o.holdout + !o.model.empty();
  if (modes > 1) throw Error(ErrorCode::InvalidArgument, "choose one of --cv K, --holdout or --model");
  const std::size_t k = modes == 0 ? 5 : o.cv;

  OutputDir dir(o.out, o.force);
  auto metrics_path = dir.claim("metrics.json");
  auto csv_path = dir.claim("confusion.csv");
  auto txt_path = dir.claim("confusion.txt");
  fs::path model_out = o.holdout ? dir.claim("model.ptrf") : fs::path();
  auto manifest_path = dir.claim("manifest.json");

  Manifest m("evaluate");
  echo_common(m, o);
  const auto params = forest_params(o);
  auto table = featurize::load_feature_table(input);
  m.add_input(input);
  std::string provider_id = "unknown";
  if (!o.schema.empty()) {
    auto schema = featurize::FeatureSchema::load(o.schema);
    check_schema(schema, table);
    provider_id = schema.provider_id();
    m.config()["schema"] = o.schema;
    m.add_input(o.schema);
  }
  auto data = labeled_rows(table);
  if (data.y.empty()) throw Error(ErrorCode::EmptyTrainingSet, "feature file has no labeled rows");
  const unsigned jobs = resolve_jobs(o.jobs);

  ojson metrics;
  evalkit::ConfusionStats stats;
  if (!o.model.empty()) {
    m.config()["mode"] = "model";
    m.config()["model"] = o.model;
    auto model = forest::load_model(o.model);
    m.add_input(o.model);
    auto predicted = forest::predict_batch(model, data.x, table.schema_hash);
    stats = evalkit::confusion_stats(data.y, predicted);
    metrics["mode"] = "model";
  } else if (o.holdout) {
    m.config()["mode"] = "holdout";
    m.config()["forest"] = forest_config(params);
    auto result = evalkit::holdout_evaluate(data.x, data.y, table.schema_hash, params, o.seed, jobs);
    stats = result.stats;
    metrics["mode"] = "holdout";
    metrics["train_size"] = result.split.train.size();
    metrics["test_size"] = result.split.test.size();
    forest::save_model(result.model, model_out);
  } else {
    m.config()["mode"] = "cross-validation";
    m.config()["cv"] = k;
    m.config()["forest"] = forest_config(params);
    auto result = evalkit::cross_validate(data.x, data.y, table.schema_hash, params, k, o.seed, jobs);
    stats = result.pooled;
    metrics["mode"] = "cross-validation";
    metrics["k"] = k;
    metrics["mean_fold_micro_f1"] = result.mean_micro_f1;
    ojson folds = ojson::array();
    for (const auto& f : result.folds) {
      folds.push_back({{"fold", f.fold}, {"train_size", f.train_size},
                       {"test_size", f.stats.matrix.total()}, {"micro_f1", f.stats.micro_f1}});
    }
    metrics["folds"] = folds;
  }
  metrics["seed"] = o.seed;
  metrics["rows"] = data.y.size();
  metrics["micro_f1"] = stats.micro_f1;
  metrics["pooled"] = stats.to_json();

  write_text(metrics_path, metrics.dump(2) + "\n");
  write_file(csv_path, [&](std::ostream& out) { stats.matrix.write_csv(out); });
  write_text(txt_path, stats.matrix.render_table());
  m.add_output(metrics_path);
  m.add_output(csv_path);
  m.add_output(txt_path);
  if (!model_out.empty()) m.add_output(model_out);

  auto rep = replication_check(stats.micro_f1, provider_id, data.y.size(), data.datasets.size());
  m.section("replication") = rep;
  m.versions()["schema_hash"] = table.schema_hash;
  m.versions()["embedder"] = provider_id;
  m.save(manifest_path);

  io.out << stats.matrix.render_table() << "micro-F1 " << format_fixed(stats.micro_f1, 4) << '\n';
  if (rep["deviation"].get<bool>()) {
    io.err << "warning: micro-F1 " << format_fixed(stats.micro_f1, 4)
           << " is outside the replication band [0.70, 0.90]\n";
  }
}

void cmd_profile(const Options& o, Streams io) {
  if (o.model.empty()) throw Error(ErrorCode::InvalidArgument, "--model is required");
  OutputDir dir(o.out, o.force);
  auto pred_path = dir.claim("predictions.tsv");
  auto manifest_path = dir.claim("manifest.json");

  Manifest m("profile");
  echo_common(m, o);
  m.config()["model"] = o.model;
  auto model = forest::load_model(o.model);
  m.add_input(o.model);

  // Feature files are used directly; pair files are featurized on the fly
  // with the schema the model was trained on.
  featurize::FeatureTable table;
  const auto& input = single_input(o, "feature or pair file");
  if (fs::path(input).extension() == ".jsonl") {
    if (o.schema.empty()) throw Error(ErrorCode::InvalidArgument, "--schema is required to profile a pair file");
    auto pairs = load_all_pairs(o, m);
    auto schema = featurize::FeatureSchema::load(o.schema);
    m.add_input(o.schema);
    m.config()["schema"] = o.schema;
    m.config()["embedder"] = o.embedder;
    auto provider = provider_from(o);
    auto vectors = featurize::vectorize_pairs(schema, pairs, *provider, postag::CascadeTagger::bundled(),
                                              resolve_jobs(o.jobs));
    table = {schema.hash(), schema.width(), {}};
    for (std::size_t i = 0; i < pairs.size(); ++i)
      table.rows.push_back({pairs[i].id, pairs[i].dataset, pairs[i].gold_task, std::move(vectors[i].values)});
  } else {
    table = featurize::load_feature_table(input);
    m.add_input(input);
  }
  if (table.rows.empty()) throw Error(ErrorCode::EmptyCorpus, "nothing to profile");

  FeatureMatrix x(table.width);
  x.reserve_rows(table.rows.size());
  for (const auto& r : table.rows) x.add_row(r.values);
  auto predicted = forest::predict_batch(model, x, table.schema_hash);

  std::vector<evalkit::DatasetPrediction> preds;
  for (std::size_t i = 0; i < table.rows.size(); ++i) preds.push_back({table.rows[i].dataset, predicted[i]});
  auto report = evalkit::distribution_report(preds);

  write_predictions(pred_path, table, predicted);
  m.add_output(pred_path);
  save_distribution(dir, m, report);
  m.versions()["schema_hash"] = table.schema_hash;
  m.save(manifest_path);
  print_distribution(io.out, report, o.format);
}

void cmd_report(const Options& o, Streams io) {
  if (o.inputs.empty()) throw Error(ErrorCode::InvalidArgument, "at least one --input predictions file is required");
  std::vector<evalkit::DatasetPrediction> preds;
  for (const auto& in : o.inputs) {
    auto part = read_predictions(in);
    preds.insert(preds.end(), part.begin(), part.end());
  }
  auto report = evalkit::distribution_report(preds);
  if (!o.out.empty()) {
    OutputDir dir(o.out, o.force);
    auto manifest_path = dir.claim("manifest.json");
    Manifest m("report");
    echo_common(m, o);
    for (const auto& in : o.inputs) m.add_input(in);
    save_distribution(dir, m, report);
    m.save(manifest_path);
  }
  print_distribution(io.out, report, o.format);
}

void cmd_annotate_sample(const Options& o, Streams io) {
  OutputDir dir(o.out, o.force);
  auto sheet_path = dir.claim("sheet.csv");
  auto key_path = dir.claim("key.csv");
  auto constraints_path = dir.claim("constraints.json");
  auto manifest_path = dir.claim("manifest.json");

  corpusio::SheetOptions opts;
  opts.per_task = o.per_task ? o.per_task : 100;
  opts.min_chars = o.min_chars;
  opts.max_chars = o.max_chars;
  opts.bins = o.bins;
  opts.policy = corpusio::parse_policy(o.length_policy);
  opts.seed = o.seed;

  Manifest m("annotate-sample");
  echo_common(m, o);
  auto pairs = load_all_pairs(o, m);
  auto sheet = corpusio::make_annotation_sheet(pairs, opts);
  m.config()["sheet"] = sheet.constraints;

  write_file(sheet_path, [&](std::ostream& out) { corpusio::write_sheet_csv(out, sheet); });
  write_file(key_path, [&](std::ostream& out) { corpusio::write_key_csv(out, sheet); });
  write_text(constraints_path, sheet.constraints.dump(2) + "\n");
  for (const auto& p : {sheet_path, key_path, constraints_path}) m.add_output(p);
  m.save(manifest_path);
  io.out << "wrote " << sheet.rows.size() << " blinded rows to " << sheet_path.string()
         << " (key kept separately in " << key_path.string() << ")\n";
}

void cmd_annotate_score(const Options& o, Streams io) {
  const auto& input = single_input(o, "filled sheet");
  if (o.key.empty()) throw Error(ErrorCode::InvalidArgument, "--key is required");
  OutputDir dir(o.out, o.force);
  auto csv_path = dir.claim("confusion.csv");
  auto txt_path = dir.claim("confusion.txt");
  auto score_path = dir.claim("score.json");
  auto manifest_path = dir.claim("manifest.json");

  Manifest m("annotate-score");
  echo_common(m, o);
  m.config()["key"] = o.key;
  std::ifstream key_in(o.key, std::ios::binary);
  if (!key_in) throw Error(ErrorCode::IoError, "cannot open " + o.key);
  auto key = corpusio::read_key_csv(key_in);
  std::ifstream sheet_in(input, std::ios::binary);
  if (!sheet_in) throw Error(ErrorCode::IoError, "cannot open " + input);
  auto filled = corpusio::read_filled_sheet(sheet_in);
  m.add_input(input);
  m.add_input(o.key);

  auto score = corpusio::score_annotation_sheet(key, filled);
  const auto& mat = score.matrix;
  ojson accuracy = ojson::object();
  for (auto t : textcore::kAllTasks) {
    const auto n = mat.row_total(t);
    accuracy[std::string(textcore::task_name(t))] = n ? static_cast<double>(mat.count(t, t)) / n : 0.0;
  }
  ojson result = {{"annotated", mat.total()},
                  {"agreement", mat.total() ? static_cast<double>(mat.trace()) / mat.total() : 0.0},
                  {"per_class_accuracy", accuracy},
                  {"missing", score.missing},
                  {"confusion_matrix", mat.to_json()}};
  write_file(csv_path, [&](std::ostream& out) { mat.write_csv(out); });
  write_text(txt_path, mat.render_table());
  write_text(score_path, result.dump(2) + "\n");
  for (const auto& p : {csv_path, txt_path, score_path}) m.add_output(p);
  m.save(manifest_path);

  io.out << mat.render_table();
  if (!score.missing.empty()) {
    io.err << score.missing.size() << " sheet rows have no annotation and were excluded (listed in "
           << score_path.string() << ")\n";
  }
}

void cmd_taxonomy(const Options& o, Streams io) {
  const auto& reg = textcore::TaxonomyRegistry::bundled();
  std::vector<textcore::TaxonomyEntry> entries = reg.entries();
  if (!o.taxonomy_class.empty()) {
    std::string c = o.taxonomy_class;
    std::transform(c.begin(), c.end(), c.begin(), [](unsigned char ch) { return std::tolower(ch); });
    textcore::EquivalenceClass cls;
    if (c == "equivalent" || c == "semanticallyequivalent") {
      cls = textcore::EquivalenceClass::SemanticallyEquivalent;
    } else if (c == "similar" || c == "semanticallysimilar") {
      cls = textcore::EquivalenceClass::SemanticallySimilar;
    } else {
      throw Error(ErrorCode::InvalidArgument, "--class must be 'equivalent' or 'similar'");
    }
    entries = reg.filter(cls);
  }
  if (!o.parent.empty()) {
    std::erase_if(entries, [&](const auto& e) { return e.parent != o.parent; });
  }

  ojson j = ojson::array();
  for (const auto& e : entries) {
    j.push_back({{"name", e.name},
                 {"class", textcore::equivalence_class_name(e.equivalence)},
                 {"parent", e.parent.empty() ? ojson(nullptr) : ojson(e.parent)},
                 {"definition", e.definition},
                 {"citations", e.citations}});
  }
  if (o.format == "json") {
    io.out << j.dump(2) << '\n';
  } else if (o.format == "tsv") {
    for (const auto& e : entries) {
      io.out << e.name << '\t' << textcore::equivalence_class_name(e.equivalence) << '\t'
             << (e.parent.empty() ? "-" : e.parent) << '\t' << e.definition << '\n';
    }
  } else {
    std::size_t w = 4;
    for (const auto& e : entries) w = std::max(w, e.name.size() + (e.parent.empty() ? 0 : 2));
    for (const auto& e : entries) {
      std::string name = (e.parent.empty() ? "" : "  ") + e.name;
      io.out << name << std::string(w + 2 - name.size(), ' ')
             << textcore::equivalence_class_name(e.equivalence) << '\n';
    }
  }
  if (!o.out.empty()) {
    OutputDir dir(o.out, o.force);
    auto path = dir.claim("taxonomy.json");
    auto manifest_path = dir.claim("manifest.json");
    Manifest m("taxonomy");
    m.config()["class"] = o.taxonomy_class;
    m.config()["parent"] = o.parent;
    m.versions()["taxonomy"] = reg.version();
    write_text(path, j.dump(2) + "\n");
    m.add_output(path);
    m.save(manifest_path);
  }
}

}  // namespace paratask::cli
