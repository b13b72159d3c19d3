#include "paratask/cli/run.hpp"

#include <CLI11.hpp>
#include <ostream>

#include "commands.hpp"
#include "paratask/cli/manifest.hpp"
#include "paratask/common/error.hpp"
#include "paratask/embed/provider.hpp"

namespace paratask::cli {
namespace {

using Handler = void (*)(const Options&, Streams);

struct Builder {
  Options& o;

  void inputs(CLI::App* sub, const std::string& what, bool required = true) {
    auto* opt = sub->add_option("--input,-i", o.inputs, what);
    if (required) opt->required();
  }
  void out(CLI::App* sub, bool required = true) {
    auto* opt = sub->add_option("--out,-o", o.out, "output directory");
    if (required) opt->required();
    sub->add_flag("--force", o.force, "overwrite existing outputs");
  }
  void seed(CLI::App* sub) {
    sub->add_option("--seed", o.seed, "random seed")->capture_default_str();
  }
  void jobs(CLI::App* sub) {
    sub->add_option("--jobs,-j", o.jobs, "worker threads (0 = all cores)")->capture_default_str();
  }
  void forest(CLI::App* sub) {
    sub->add_option("--trees", o.trees, "number of trees")->capture_default_str()->check(CLI::PositiveNumber);
    sub->add_option("--max-depth", o.max_depth, "maximum tree depth")->capture_default_str();
    sub->add_option("--min-samples-split", o.min_samples_split, "smallest node that may split")
        ->capture_default_str();
  }
  void embedder(CLI::App* sub) {
    sub->add_option("--embedder", o.embedder,
                    "builtin[:DIM] | precomputed:PATH | remote[:URL] (URL falls back to $" +
                        std::string(embed::kEmbedderUrlEnv) + ")")
        ->capture_default_str();
  }
};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"paratask: paraphrase task classification toolkit", "paratask"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);
  Builder b{o};
  std::vector<std::pair<CLI::App*, Handler>> handlers;

  auto* ingest = app.add_subcommand("ingest", "read corpora through descriptors into a pair file");
  ingest->add_option("--descriptor,-d", o.descriptors, "corpus descriptor (JSON), repeatable")->required();
  b.out(ingest);
  handlers.emplace_back(ingest, cmd_ingest);

  auto* sample = app.add_subcommand("sample", "draw a task-balanced training sample");
  b.inputs(sample, "pair file(s)");
  b.out(sample);
  b.seed(sample);
  sample->add_option("--per-task", o.per_task, "pairs per task (default 10000)");
  handlers.emplace_back(sample, cmd_sample);

  auto* featurize = app.add_subcommand("featurize", "compute feature vectors for pairs");
  b.inputs(featurize, "pair file(s)");
  b.out(featurize);
  b.seed(featurize);
  b.jobs(featurize);
  b.embedder(featurize);
  featurize->add_option("--min-count", o.min_count, "minimum document frequency of a POS n-gram")
      ->capture_default_str();
  featurize->add_option("--schema", o.schema, "reuse an existing feature schema");
  handlers.emplace_back(featurize, cmd_featurize);

  auto* train = app.add_subcommand("train", "train a random forest on a feature file");
  b.inputs(train, "feature file");
  b.out(train);
  b.seed(train);
  b.jobs(train);
  b.forest(train);
  train->add_option("--schema", o.schema, "schema the feature file must match");
  handlers.emplace_back(train, cmd_train);

  auto* evaluate = app.add_subcommand("evaluate", "cross-validate, hold out, or score a trained model");
  b.inputs(evaluate, "feature file");
  b.out(evaluate);
  b.seed(evaluate);
  b.jobs(evaluate);
  b.forest(evaluate);
  evaluate->add_option("--cv", o.cv, "k-fold cross-validation (default 5)");
  evaluate->add_flag("--holdout", o.holdout, "stratified 80/20 holdout");
  evaluate->add_option("--model", o.model, "score this model instead of training");
  evaluate->add_option("--schema", o.schema, "schema of the feature file (enables the replication check)");
  handlers.emplace_back(evaluate, cmd_evaluate);

  auto* profile = app.add_subcommand("profile", "predict tasks for a corpus and report the distribution");
  b.inputs(profile, "feature file, or pair file (.jsonl) with --schema");
  b.out(profile);
  b.seed(profile);
  b.jobs(profile);
  b.embedder(profile);
  profile->add_option("--model", o.model, "trained model")->required();
  profile->add_option("--schema", o.schema, "schema used to featurize a pair file");
  profile->add_option("--format", o.format, "stdout format")->check(CLI::IsMember({"table", "csv", "json"}));
  handlers.emplace_back(profile, cmd_profile);

  auto* report = app.add_subcommand("report", "distribution report from prediction files");
  b.inputs(report, "predictions.tsv file(s)");
  b.out(report, false);
  report->add_option("--format", o.format, "stdout format")->check(CLI::IsMember({"table", "csv", "json"}));
  handlers.emplace_back(report, cmd_report);

  auto* asample = app.add_subcommand("annotate-sample", "generate a blinded annotation sheet and its key");
  b.inputs(asample, "pair file(s)");
  b.out(asample);
  b.seed(asample);
  asample->add_option("--per-task", o.per_task, "pairs per task (default 100)");
  asample->add_option("--min-chars", o.min_chars, "length window lower bound")->capture_default_str();
  asample->add_option("--max-chars", o.max_chars, "length window upper bound")->capture_default_str();
  asample->add_option("--bins", o.bins, "equal-width length bins")->capture_default_str()->check(CLI::PositiveNumber);
  asample->add_option("--length-policy", o.length_policy, "per-text | pair-sum")
      ->capture_default_str()
      ->check(CLI::IsMember({"per-text", "pair-sum"}));
  handlers.emplace_back(asample, cmd_annotate_sample);

  auto* ascore = app.add_subcommand("annotate-score", "score a filled annotation sheet against its key");
  b.inputs(ascore, "filled sheet CSV");
  b.out(ascore);
  ascore->add_option("--key", o.key, "key CSV")->required();
  handlers.emplace_back(ascore, cmd_annotate_score);

  auto* taxonomy = app.add_subcommand("taxonomy", "list the paraphrasing task taxonomy");
  taxonomy->add_option("--class", o.taxonomy_class, "equivalent | similar");
  taxonomy->add_option("--parent", o.parent, "only children of this task");
  taxonomy->add_option("--format", o.format, "table | tsv | json")->check(CLI::IsMember({"table", "tsv", "json"}));
  b.out(taxonomy, false);
  handlers.emplace_back(taxonomy, cmd_taxonomy);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    if (auto* sub = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front()) {
      err << sub->help();
    } else {
      err << app.help();
    }
    return 1;
  }

  for (const auto& [sub, handler] : handlers) {
    if (!sub->parsed()) continue;
    try {
      handler(o, {out, err});
      return 0;
    } catch (const Error& e) {
      err << "error: " << e.what() << '\n';
      if (e.code() == ErrorCode::InvalidArgument) {
        err << sub->help();
        return 1;
      }
      return 2;
    } catch (const std::exception& e) {
      err << "error: " << e.what() << '\n';
      return 2;
    }
  }
  return 1;
}

}  // namespace paratask::cli
