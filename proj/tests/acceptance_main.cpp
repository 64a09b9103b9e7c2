// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Criterion 6 exercises the command-line binary, whose path
// arrives as argv[1]; everything else runs in-process against the library.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "argrev/argument_features.hpp"
#include "argrev/corpus.hpp"
#include "argrev/evaluation.hpp"
#include "argrev/feature_selection.hpp"
#include "argrev/random.hpp"
#include "argrev/svm.hpp"
#include "argrev/synth.hpp"
#include "oracles.hpp"

using namespace argrev;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(std::string message) {
    if (ok) {
      ok = false;
      detail = std::move(message);
    }
  }
};

std::string fmt(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.6g", value);
  return buffer;
}

AnnotatedReview random_review(Rng& rng, std::uint64_t max_clauses) {
  static const char* kWords[] = {"plot",   "pages",   "42",     "writing",
                                 "story",  "index",   "7th",    "characters",
                                 "boring", "useful",  "detail", "x"};
  AnnotatedReview review;
  review.id = "acc";
  review.total_votes = 1;
  const auto clause_count = rng.below(max_clauses + 1);
  for (std::uint64_t c = 0; c < clause_count; ++c) {
    ClauseAnnotation clause;
    const auto tokens = 1 + rng.below(8);
    for (std::uint64_t t = 0; t < tokens; ++t) {
      if (t) clause.text += ' ';
      clause.text += kWords[rng.below(std::size(kWords))];
    }
    const auto type = static_cast<ComponentType>(rng.below(kComponentTypeCount));
    clause.annotator_labels = {type};
    clause.final_label = type;
    review.clauses.push_back(std::move(clause));
  }
  return review;
}

// --- criterion 1: dimensionality ------------------------------------------

Outcome criterion1() {
  Outcome outcome;
  if (af::kTotalDims != 112119)
    outcome.fail("total dimensionality is " + std::to_string(af::kTotalDims));

  Rng rng(101);
  for (int trial = 0; trial < 12 && outcome.ok; ++trial) {
    auto review = random_review(rng, 6);
    auto features = af::extract_all(review, trial % 2 == 0);
    if (features.component.dimension != 16002)
      outcome.fail("component level emitted " +
                   std::to_string(features.component.dimension) + " dims");
    for (const auto* fv : {&features.token, &features.letter, &features.position})
      if (fv->dimension != 32039)
        outcome.fail("a statistic level emitted " +
                     std::to_string(fv->dimension) + " dims");
    const auto combined = af::concatenate(features);
    for (const auto& [index, value] : combined.entries()) {
      if (index >= af::kTotalDims)
        outcome.fail("concatenated index " + std::to_string(index) +
                     " out of space");
      (void)value;
    }
  }
  return outcome;
}

// --- criterion 2: majority-predictor closed form ---------------------------

Outcome criterion2() {
  Outcome outcome;
  for (std::uint32_t scale : {1u, 3u}) {
    std::vector<std::int8_t> truth, predicted;
    std::vector<double> scores;
    // 60/40 split, interleaved so ordering clearly does not matter.
    for (std::uint32_t i = 0; i < 100 * scale; ++i) {
      truth.push_back(i % 5 < 3 ? -1 : +1);
      predicted.push_back(-1);  // forced majority-class prediction
      scores.push_back(0.0);
    }
    auto report = compute_metrics(truth, predicted, scores, Averaging::Weighted);
    const struct {
      const char* name;
      double actual, expected;
    } checks[] = {{"accuracy", report.accuracy, 0.600},
                  {"precision", report.precision, 0.360},
                  {"recall", report.recall, 0.600},
                  {"f1", report.f1, 0.450},
                  {"auc", report.auc, 0.500}};
    for (const auto& check : checks)
      if (std::abs(check.actual - check.expected) > 1e-9)
        outcome.fail(std::string(check.name) + " = " + fmt(check.actual) +
                     ", expected " + fmt(check.expected));
  }
  return outcome;
}

// --- criterion 3: oracle equivalences --------------------------------------

Outcome criterion3() {
  Outcome outcome;

  // (a) argument features against the naive dense oracle, exact.
  Rng rng_a(301);
  for (int trial = 0; trial < 120 && outcome.ok; ++trial) {
    auto review = random_review(rng_a, 5);
    auto components = assemble_components(review, trial % 3 != 0);
    if (components.size() > 5) continue;  // merging keeps it within bounds anyway
    auto expected = oracles::af_dense(components);
    std::vector<double> actual(af::kTotalDims, 0.0);
    const auto combined = af::concatenate(af::extract_all(af::summarize(components)));
    for (const auto& [index, value] : combined.entries()) actual[index] = value;
    for (std::uint32_t dim = 0; dim < af::kTotalDims; ++dim)
      if (actual[dim] != expected[dim]) {
        outcome.fail("argument feature mismatch at dim " + std::to_string(dim) +
                     ": " + fmt(actual[dim]) + " vs oracle " +
                     fmt(expected[dim]));
        break;
      }
  }

  // (b) SMO dual objective against the exhaustive tiny-QP solver.
  Rng rng_b(302);
  for (int trial = 0; trial < 24 && outcome.ok; ++trial) {
    const std::size_t n = 6;
    std::vector<SparseVector> x(n);
    std::vector<std::int8_t> y(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::uint32_t d = 0; d < 3; ++d)
        if (rng_b.chance(0.85)) x[i].push_back(d, rng_b.uniform(0.0, 1.0));
      y[i] = rng_b.chance(0.5) ? +1 : -1;
    }
    y[0] = +1;
    y[n - 1] = -1;

    SvmParams params;
    params.kernel = trial % 2 ? KernelSpec{KernelKind::Rbf, 1.0}
                              : KernelSpec{KernelKind::Linear, 0.0};
    params.c = trial % 3 == 0 ? 0.5 : (trial % 3 == 1 ? 2.0 : 10.0);
    params.tol = 1e-6;

    std::vector<std::vector<double>> kernel(n, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        kernel[i][j] = kernel_value(params.kernel, x[i], x[j]);
    auto exact = oracles::svm_dual(kernel, y, params.c);
    if (!exact) {
      outcome.fail("qp oracle found no solution on trial " +
                   std::to_string(trial));
      break;
    }
    auto model = train_svm(x, y, params, ScalingStats{});
    if (std::abs(model.dual_objective - exact->objective) > 1e-4)
      outcome.fail("dual objective " + fmt(model.dual_objective) +
                   " vs oracle " + fmt(exact->objective) + " on trial " +
                   std::to_string(trial));
  }

  // (c) information gain against the exhaustive-threshold oracle.
  Rng rng_c(303);
  for (int trial = 0; trial < 120 && outcome.ok; ++trial) {
    std::vector<double> column(20);
    std::vector<std::uint8_t> labels(20);
    const auto alphabet = 2 + rng_c.below(5);
    for (std::size_t i = 0; i < column.size(); ++i) {
      column[i] = static_cast<double>(rng_c.below(alphabet)) * 0.5;
      labels[i] = static_cast<std::uint8_t>(rng_c.below(2));
    }
    auto fast = information_gain(column, labels);
    auto slow = oracles::information_gain(column, labels);
    if (std::abs(fast.ig - slow.ig) > 1e-9 ||
        fast.threshold.has_value() != slow.threshold.has_value() ||
        (fast.threshold && std::abs(*fast.threshold - *slow.threshold) > 1e-9))
      outcome.fail("information gain " + fmt(fast.ig) + " vs oracle " +
                   fmt(slow.ig) + " on trial " + std::to_string(trial));
  }
  return outcome;
}

// --- criterion 4: Fleiss' kappa --------------------------------------------

Outcome criterion4() {
  Outcome outcome;

  std::vector<std::vector<std::uint32_t>> unanimous = {
      {4, 0, 0}, {0, 4, 0}, {0, 0, 4}, {4, 0, 0}, {0, 4, 0}};
  if (fleiss_kappa(unanimous) != 1.0)
    outcome.fail("unanimous table gave " + fmt(fleiss_kappa(unanimous)));

  std::vector<std::vector<std::uint32_t>> hand = {
      {3, 0}, {2, 1}, {1, 2}, {0, 3}, {2, 1}};
  if (std::abs(fleiss_kappa(hand) - 11.0 / 56.0) > 1e-9)
    outcome.fail("hand table gave " + fmt(fleiss_kappa(hand)) + ", expected " +
                 fmt(11.0 / 56.0));

  Rng rng(404);
  for (std::size_t categories : {2, 4, 7}) {
    std::vector<std::vector<std::uint32_t>> table(
        5000, std::vector<std::uint32_t>(categories, 0));
    for (auto& row : table)
      for (int r = 0; r < 3; ++r) ++row[rng.below(categories)];
    const double kappa = fleiss_kappa(table);
    if (!(std::abs(kappa) < 0.05))
      outcome.fail("random table with " + std::to_string(categories) +
                   " categories gave kappa " + fmt(kappa));
  }
  return outcome;
}

// --- criterion 5: directional improvement on planted signal ----------------

Outcome criterion5() {
  Outcome outcome;
  const char* baselines[] = {"STR", "UGR", "GALC", "INQUIRER"};
  int improving_seeds = 0;
  std::vector<ManifestEntry> combined;
  std::string seed_log;

  for (std::uint64_t s = 0; s < 10; ++s) {
    SyntheticSpec spec;
    spec.review_count = 400;
    spec.strength = 0.8;
    Rng rng(1000 + s);
    auto corpus = prepare_corpus(generate_corpus(spec, rng));

    ExperimentOptions options;
    options.folds = 3;
    options.seed = 1000 + s;
    for (const char* baseline : baselines) {
      options.configurations.push_back(*configuration_from_name(baseline));
      options.configurations.push_back(
          *configuration_from_name(std::string(baseline) + "+AF"));
    }
    auto result = run_experiment(corpus, options);

    std::map<std::string, double> f1;
    for (const auto& config : result.configs) {
      f1[config.config.name] = config.mean.f1;
      combined.insert(combined.end(), config.manifest.begin(),
                      config.manifest.end());
    }
    bool all_improve = true;
    for (const char* baseline : baselines)
      all_improve =
          all_improve && f1[std::string(baseline) + "+AF"] > f1[baseline];
    improving_seeds += all_improve;
    seed_log += all_improve ? '+' : '-';
  }

  if (improving_seeds < 9)
    outcome.fail("adding argument features improved every baseline in only " +
                 std::to_string(improving_seeds) + "/10 seeds [" + seed_log +
                 "]");

  auto breakdown = family_breakdown(combined);
  const FamilyBreakdown::Entry* top = &breakdown.families[0];
  for (const auto& entry : breakdown.families)
    if (entry.selected > top->selected) top = &entry;
  if (top->family != FeatureFamily::AfToken)
    outcome.fail("selection argmax is " + std::string(family_name(top->family)) +
                 " (share " + fmt(top->share) + "), expected " +
                 std::string(family_name(FeatureFamily::AfToken)));
  return outcome;
}

// --- criterion 6: byte-identical command-line runs --------------------------

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Outcome criterion6(const std::string& cli) {
  Outcome outcome;
  if (cli.empty() || !fs::exists(cli)) {
    outcome.fail("command-line binary not found at '" + cli + "'");
    return outcome;
  }

  std::string pattern = (fs::temp_directory_path() / "accept-XXXXXX").string();
  std::vector<char> buffer(pattern.begin(), pattern.end());
  buffer.push_back('\0');
  if (!mkdtemp(buffer.data())) {
    outcome.fail("cannot create temporary directory");
    return outcome;
  }
  const fs::path dir(buffer.data());

  auto run = [&](const std::string& command) {
    return std::system(command.c_str()) == 0;
  };
  const std::string corpus = (dir / "corpus.tsv").string();
  if (!run(cli + " synth --out " + corpus +
           " --reviews 150 --seed 42 --strength 0.8 > /dev/null 2>&1")) {
    outcome.fail("synth run failed");
    return outcome;
  }
  for (const char* name : {"run1", "run2"}) {
    const std::string out_dir = (dir / name).string();
    if (!run(cli + " experiment --corpus " + corpus + " --out-dir " + out_dir +
             " --seed 9 --folds 5 > " + out_dir + ".log 2>&1")) {
      outcome.fail(std::string("experiment run failed, see ") + out_dir + ".log");
      return outcome;
    }
  }

  std::vector<std::string> names = {"report.txt", "report.csv"};
  for (const auto& entry : fs::directory_iterator(dir / "run1")) {
    const auto name = entry.path().filename().string();
    if (name.rfind("manifest-", 0) == 0) names.push_back(name);
  }
  if (names.size() < 3) outcome.fail("no manifests were written");
  for (const auto& name : names) {
    const auto first = read_file(dir / "run1" / name);
    const auto second = read_file(dir / "run2" / name);
    if (first.empty())
      outcome.fail(name + " is empty or missing");
    else if (first != second)
      outcome.fail(name + " differs between identical runs");
  }
  if (outcome.ok) fs::remove_all(dir);
  return outcome;
}

// --- criterion 7: leakage guard ---------------------------------------------

Outcome criterion7() {
  Outcome outcome;
  SyntheticSpec spec;
  spec.review_count = 200;
  spec.strength = 0.0;  // labels are fair coins: nothing real to learn
  Rng rng(777);
  auto corpus = prepare_corpus(generate_corpus(spec, rng));

  ExperimentOptions options;
  options.folds = 5;
  options.seed = 5;
  options.configurations.push_back(*configuration_from_name("AF"));

  auto clean = run_experiment(corpus, options);
  options.fit_on_all_data = true;
  auto leaky = run_experiment(corpus, options);

  const double clean_auc = clean.configs[0].mean.auc;
  const double leaky_auc = leaky.configs[0].mean.auc;
  if (std::abs(clean_auc - 0.5) > 0.1)
    outcome.fail("per-fold pipeline reports auc " + fmt(clean_auc) +
                 " on no-signal data, outside 0.5 +/- 0.1");
  if (!(leaky_auc > 0.55))
    outcome.fail("fitting on all data reports auc " + fmt(leaky_auc) +
                 ", expected inflation above 0.55 (clean " + fmt(clean_auc) +
                 ")");
  return outcome;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";

  struct Criterion {
    int id;
    const char* label;
    double budget_seconds;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {1, "feature dimensionality is exact", 1.0, criterion1},
      {2, "majority-predictor metrics match the closed form", 1.0, criterion2},
      {3, "extractor, smo and information gain match their oracles", 60.0,
       criterion3},
      {4, "fleiss kappa behaves on unanimous, hand and random tables", 10.0,
       criterion4},
      {5, "argument features lift every baseline on planted-signal corpora",
       300.0, criterion5},
      {6, "identical experiment runs are byte-identical", 300.0, nullptr},
      {7, "per-fold fitting stays honest while leakage inflates auc", 300.0,
       criterion7},
  };

  bool all_ok = true;
  for (const auto& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = criterion.id == 6 ? criterion6(cli) : criterion.run();
    } catch (const std::exception& error) {
      outcome.fail(std::string("exception: ") + error.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (seconds > criterion.budget_seconds)
      outcome.fail("took " + fmt(seconds) + "s, budget " +
                   fmt(criterion.budget_seconds) + "s");
    std::printf("%s criterion %d: %s (%.2fs)%s%s\n",
                outcome.ok ? "PASS" : "FAIL", criterion.id, criterion.label,
                seconds, outcome.ok ? "" : " -- ",
                outcome.ok ? "" : outcome.detail.c_str());
    std::fflush(stdout);
    all_ok = all_ok && outcome.ok;
  }
  return all_ok ? 0 : 1;
}
