// argrev: argumentation-feature pipeline for review-helpfulness experiments.
//
// Subcommands:
//   validate    check a corpus file and print per-type counts and agreement
//   synth       generate a synthetic annotated corpus
//   experiment  run the cross-validated experiment over feature configurations
//   analyze     break down selected-feature manifests by argument family
//
// Exit codes: 0 success, 2 invalid input (config, corpus, arguments),
// 1 runtime failure.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "argrev/corpus.hpp"
#include "argrev/evaluation.hpp"
#include "argrev/formats.hpp"
#include "argrev/synth.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitInvalid = 2;

struct PipelineConfig {
  std::string corpus;
  std::string out_dir = "argrev-out";
  std::string stopwords;         // empty -> builtin list
  std::string emotion_lexicon;   // empty -> builtin
  std::string semantic_lexicon;  // empty -> builtin
  std::uint64_t seed = 1;
  std::uint32_t folds = 10;
  std::string kernel = "rbf";
  double c = 1.0;
  double gamma = 0.0;  // <= 0: 1 / active dimension
  double tol = 1e-3;
  std::uint64_t max_kernel_evals = 10'000'000;
  bool merge_clauses = true;
  std::string averaging = "weighted";
  std::uint32_t min_term_frequency = 3;
  std::uint32_t filter_above_dims = 10000;
  std::vector<std::string> configurations;  // empty -> default nine
};

void from_json_file(const std::string& path, PipelineConfig& config) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  json j = json::parse(in);
  auto get = [&](const char* key, auto& field) {
    if (j.contains(key)) j.at(key).get_to(field);
  };
  get("corpus", config.corpus);
  get("out_dir", config.out_dir);
  get("stopwords", config.stopwords);
  get("emotion_lexicon", config.emotion_lexicon);
  get("semantic_lexicon", config.semantic_lexicon);
  get("seed", config.seed);
  get("folds", config.folds);
  get("kernel", config.kernel);
  get("c", config.c);
  get("gamma", config.gamma);
  get("tol", config.tol);
  get("max_kernel_evals", config.max_kernel_evals);
  get("merge_clauses", config.merge_clauses);
  get("averaging", config.averaging);
  get("min_term_frequency", config.min_term_frequency);
  get("filter_above_dims", config.filter_above_dims);
  get("configurations", config.configurations);
}

json to_json(const PipelineConfig& config) {
  return json{{"corpus", config.corpus},
              {"out_dir", config.out_dir},
              {"stopwords", config.stopwords},
              {"emotion_lexicon", config.emotion_lexicon},
              {"semantic_lexicon", config.semantic_lexicon},
              {"seed", config.seed},
              {"folds", config.folds},
              {"kernel", config.kernel},
              {"c", config.c},
              {"gamma", config.gamma},
              {"tol", config.tol},
              {"max_kernel_evals", config.max_kernel_evals},
              {"merge_clauses", config.merge_clauses},
              {"averaging", config.averaging},
              {"min_term_frequency", config.min_term_frequency},
              {"filter_above_dims", config.filter_above_dims},
              {"configurations", config.configurations}};
}

int cmd_validate(const std::string& corpus_path) {
  const auto reviews = argrev::load_corpus(corpus_path);
  const auto stats = argrev::corpus_statistics(reviews);

  std::cout << "reviews: " << stats.review_count << "  clauses: "
            << stats.clause_count << "  helpful: " << stats.helpful_count
            << '\n';
  if (stats.annotator_count)
    std::cout << "annotators per clause: " << *stats.annotator_count << '\n';
  else
    std::cout << "annotators per clause: varies (agreement not computed)\n";

  std::cout << std::left << std::setw(18) << "component type" << std::right
            << std::setw(9) << "clauses" << std::setw(12) << "components"
            << std::setw(12) << "unmerged" << std::setw(9) << "kappa" << '\n';
  for (std::size_t t = 0; t < argrev::kComponentTypeCount; ++t) {
    const auto& row = stats.per_type[t];
    std::cout << std::left << std::setw(18)
              << argrev::to_string(static_cast<argrev::ComponentType>(t))
              << std::right << std::setw(9) << row.clause_count << std::setw(12)
              << row.merged_component_count << std::setw(12)
              << row.unmerged_component_count;
    char kappa[16];
    std::snprintf(kappa, sizeof kappa, "%9.3f", row.kappa);
    std::cout << kappa << '\n';
  }
  char overall[16];
  std::snprintf(overall, sizeof overall, "%.3f", stats.overall_kappa);
  std::cout << "overall kappa: " << overall << '\n';
  return kExitOk;
}

int cmd_synth(const argrev::SyntheticSpec& spec, std::uint64_t seed,
              const std::string& out_path) {
  spec.validate();
  argrev::Rng rng(seed);
  const auto reviews = argrev::generate_corpus(spec, rng);
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot write corpus file: " + out_path);
  argrev::write_corpus(out, reviews);
  std::cout << "wrote " << reviews.size() << " reviews to " << out_path << '\n';
  return kExitOk;
}

int cmd_experiment(const PipelineConfig& config) {
  if (config.corpus.empty())
    throw std::invalid_argument("experiment: --corpus (or config entry) required");
  if (config.folds < 2) throw std::invalid_argument("experiment: need folds >= 2");
  if (config.c <= 0.0) throw std::invalid_argument("experiment: need c > 0");
  const auto averaging = argrev::averaging_from_name(config.averaging);
  if (!averaging)
    throw std::invalid_argument("experiment: averaging must be weighted|macro");
  if (config.kernel != "rbf" && config.kernel != "linear")
    throw std::invalid_argument("experiment: kernel must be rbf|linear");

  const auto reviews = argrev::load_corpus(config.corpus);

  argrev::PrepareOptions prepare;
  prepare.merge_adjacent_clauses = config.merge_clauses;
  if (!config.stopwords.empty())
    prepare.stopwords = argrev::StopwordSet::load(config.stopwords);
  if (!config.emotion_lexicon.empty())
    prepare.emotion_lexicon = argrev::Lexicon::load(config.emotion_lexicon);
  if (!config.semantic_lexicon.empty())
    prepare.semantic_lexicon = argrev::Lexicon::load(config.semantic_lexicon);
  const auto corpus = argrev::prepare_corpus(reviews, prepare);

  argrev::ExperimentOptions options;
  options.folds = config.folds;
  options.seed = config.seed;
  options.svm.kernel.kind = config.kernel == "rbf" ? argrev::KernelKind::Rbf
                                                   : argrev::KernelKind::Linear;
  options.svm.kernel.gamma = config.gamma;
  options.svm.c = config.c;
  options.svm.tol = config.tol;
  options.svm.max_kernel_evals = config.max_kernel_evals;
  options.averaging = *averaging;
  options.min_term_frequency = config.min_term_frequency;
  options.filter_above_dims = config.filter_above_dims;
  for (const auto& name : config.configurations) {
    const auto found = argrev::configuration_from_name(name);
    if (!found)
      throw std::invalid_argument("experiment: unknown configuration '" + name +
                                  "'");
    options.configurations.push_back(*found);
  }

  const auto result = argrev::run_experiment(corpus, options);

  const std::filesystem::path out_dir(config.out_dir);
  std::filesystem::create_directories(out_dir);

  {
    std::ofstream out(out_dir / "config.json");
    out << to_json(config).dump(2) << '\n';
  }
  const std::string report = argrev::format_report(result);
  {
    std::ofstream out(out_dir / "report.txt");
    out << report;
  }
  {
    std::ofstream out(out_dir / "report.csv");
    argrev::write_report_csv(out, result);
  }
  for (const auto& config_result : result.configs) {
    if (config_result.manifest.empty()) continue;
    std::ofstream out(out_dir / ("manifest-" + config_result.config.name + ".tsv"));
    argrev::save_manifest(out, config_result.manifest);
  }

  std::cout << report;
  std::cout << "outputs written to " << out_dir.string() << '\n';
  return kExitOk;
}

int cmd_analyze(const std::vector<std::string>& manifest_paths) {
  std::vector<argrev::ManifestEntry> entries;
  for (const auto& path : manifest_paths) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open manifest: " + path);
    auto loaded = argrev::load_manifest(in);
    entries.insert(entries.end(), std::make_move_iterator(loaded.begin()),
                   std::make_move_iterator(loaded.end()));
  }
  std::cout << argrev::format_selection_analysis(entries);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"argumentation-feature pipeline for review helpfulness"};
  app.require_subcommand(1);

  // validate
  std::string validate_corpus;
  auto* validate = app.add_subcommand("validate", "check a corpus file");
  validate->add_option("--corpus", validate_corpus, "corpus file")->required();

  // synth
  argrev::SyntheticSpec spec;
  std::uint64_t synth_seed = 1;
  std::string synth_out = "corpus.tsv";
  std::vector<double> type_probs;
  auto* synth = app.add_subcommand("synth", "generate a synthetic corpus");
  synth->add_option("--out", synth_out, "output corpus file");
  synth->add_option("--seed", synth_seed, "random seed");
  synth->add_option("--reviews", spec.review_count, "number of reviews");
  synth->add_option("--strength", spec.strength,
                    "P(label follows the planted signal), in [0,1]");
  synth->add_option("--noise", spec.annotator_noise,
                    "P(secondary annotator flips a clause label)");
  synth->add_option("--min-clauses", spec.min_clauses, "minimum clauses");
  synth->add_option("--max-clauses", spec.max_clauses, "maximum clauses");
  synth->add_option("--type-probs", type_probs,
                    "seven clause-type probabilities, canonical order, sum 1")
      ->expected(7);

  // experiment
  PipelineConfig config;
  std::string config_path;
  auto* experiment =
      app.add_subcommand("experiment", "run the cross-validated experiment");
  experiment->add_option("--config", config_path, "JSON config file");
  auto* opt_corpus = experiment->add_option("--corpus", config.corpus, "corpus file");
  auto* opt_out = experiment->add_option("--out-dir", config.out_dir,
                                         "output directory");
  auto* opt_seed = experiment->add_option("--seed", config.seed, "random seed");
  auto* opt_folds = experiment->add_option("--folds", config.folds,
                                           "cross-validation folds");
  auto* opt_kernel =
      experiment->add_option("--kernel", config.kernel, "svm kernel: rbf|linear");
  auto* opt_c = experiment->add_option("--c", config.c, "svm cost parameter");
  auto* opt_gamma = experiment->add_option(
      "--gamma", config.gamma, "rbf gamma; <= 0 means 1/active-dimension");
  auto* opt_merge = experiment->add_flag(
      "--merge-clauses,!--no-merge-clauses", config.merge_clauses,
      "merge adjacent same-label clauses into one component");
  auto* opt_avg = experiment->add_option("--averaging", config.averaging,
                                         "metric averaging: weighted|macro");

  // analyze
  std::vector<std::string> manifest_paths;
  auto* analyze =
      app.add_subcommand("analyze", "selected-feature family breakdown");
  analyze->add_option("manifests", manifest_paths, "manifest files")
      ->required()
      ->expected(-1);

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) return cmd_validate(validate_corpus);
    if (synth->parsed()) {
      if (!type_probs.empty())
        std::copy(type_probs.begin(), type_probs.end(),
                  spec.type_probabilities.begin());
      return cmd_synth(spec, synth_seed, synth_out);
    }
    if (experiment->parsed()) {
      // Config file first, then explicit command-line overrides on top.
      if (!config_path.empty()) {
        PipelineConfig from_file;
        from_json_file(config_path, from_file);
        const PipelineConfig overrides = config;
        config = from_file;
        if (opt_corpus->count()) config.corpus = overrides.corpus;
        if (opt_out->count()) config.out_dir = overrides.out_dir;
        if (opt_seed->count()) config.seed = overrides.seed;
        if (opt_folds->count()) config.folds = overrides.folds;
        if (opt_kernel->count()) config.kernel = overrides.kernel;
        if (opt_c->count()) config.c = overrides.c;
        if (opt_gamma->count()) config.gamma = overrides.gamma;
        if (opt_merge->count()) config.merge_clauses = overrides.merge_clauses;
        if (opt_avg->count()) config.averaging = overrides.averaging;
      }
      return cmd_experiment(config);
    }
    if (analyze->parsed()) return cmd_analyze(manifest_paths);
  } catch (const argrev::ParseError& error) {
    std::cerr << "error: " << error.what() << '\n';
    return kExitInvalid;
  } catch (const std::invalid_argument& error) {
    std::cerr << "error: " << error.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << '\n';
    return kExitRuntime;
  }
  return kExitOk;
}
