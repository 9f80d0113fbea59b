// Command-line front end: generate, compute, evaluate, train.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "ringged/dataset_io.hpp"
#include "ringged/error.hpp"
#include "ringged/evaluation.hpp"
#include "ringged/exact.hpp"
#include "ringged/ml.hpp"
#include "ringged/param_learning.hpp"
#include "ringged/synthetic.hpp"

using namespace ringged;

namespace {

struct GenerateArgs {
  std::size_t min_size = 8;
  std::size_t max_size = 12;
  std::size_t alphabet = 1;
  std::size_t count = 50;
  std::string out;
};

struct ComputeArgs {
  std::string dataset;
  std::string method = "ring_opt";
  std::string params;
  std::string model;
  std::size_t solutions = 1;
  std::size_t ring_size = 3;
  bool greedy_final = false;
  std::string out;
};

struct EvaluateArgs {
  std::string dataset;
  std::string bounds;
};

struct TrainArgs {
  std::string dataset;
  std::string mode = "ring_params";
  double mu = 1.0;
  std::size_t restarts = 4;
  std::string set_distance = "lsape_optimal";
  std::size_t ring_size = 3;
  double nu = 0.5;
  std::size_t oracle_cap = kDefaultExactNodeCap;
  std::size_t solutions = 1;
  std::string out;
};

std::ostream& open_output(const std::string& path, std::ofstream& file) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path);
  if (!file) throw ValidationError("cannot write '" + path + "'");
  return file;
}

std::string collection_name(const std::string& path) {
  return std::filesystem::path(path).stem().string();
}

int run_generate(const GenerateArgs& a, std::uint64_t seed) {
  TreeDatasetSpec spec;
  spec.min_size = a.min_size;
  spec.max_size = a.max_size;
  spec.alphabet = a.alphabet;
  spec.count = a.count;
  spec.seed = seed;
  const GraphCollection trees = generate_trees(spec);
  std::ofstream file;
  open_output(a.out, file) << serialize_collection(trees) << '\n';
  return 0;
}

int run_compute(const ComputeArgs& a, std::uint64_t, std::size_t threads, const CostModel& costs) {
  const GraphCollection collection = load_collection(a.dataset);
  HeuristicConfig config;
  config.method = parse_method(a.method);
  config.num_solutions = a.solutions;
  config.greedy_final_solve = a.greedy_final;
  config.threads = threads;
  config.ring_size = a.ring_size;
  config.lambda = LambdaWeights::uniform(a.ring_size);
  if (!a.params.empty()) {
    const RingParamsFile p = load_ring_params(a.params);
    config.ring_size = p.params.ring_size;
    config.alpha = p.params.alpha;
    config.lambda = p.params.lambda;
  }
  std::optional<OneClassSvmModel> model;
  if (config.method == Method::kRingMl) {
    if (a.model.empty()) throw ValidationError("method ring_ml needs --model");
    model = OneClassSvmModel::load(a.model);
    config.ml_set_distance = model->set_distance;
    config.ring_size = model->ring_size();
    config.lambda = LambdaWeights::uniform(config.ring_size);
  }
  const auto rows = compute_bounds(collection, config, costs, model ? &*model : nullptr);
  std::ofstream file;
  write_bounds_csv(open_output(a.out, file), rows);
  return 0;
}

int run_evaluate(const EvaluateArgs& a) {
  const GraphCollection collection = load_collection(a.dataset);
  std::ifstream in(a.bounds);
  if (!in) throw ValidationError("cannot open '" + a.bounds + "'");
  const auto rows = read_bounds_csv(in);
  const auto [b, t] = averages(rows);
  std::printf("pairs %zu\nmean_bound %.17g\nmean_seconds %.17g\n", rows.size(), b, t);
  if (collection.has_class_labels()) {
    std::printf("knn_ratio %.17g\n", knn_accuracy(collection, rows));
  } else {
    std::printf("knn_ratio n/a (no class labels)\n");
  }
  return 0;
}

int run_train(const TrainArgs& a, std::uint64_t seed, std::size_t threads, const CostModel& costs) {
  const GraphCollection collection = load_collection(a.dataset);
  const SetDistanceKind kind = parse_set_distance_kind(a.set_distance);
  std::ofstream file;
  if (a.mode == "ring_params") {
    TrainingObjectiveConfig config;
    config.mu = a.mu;
    config.kind = kind;
    config.restarts = a.restarts;
    config.seed = seed;
    config.num_solutions = a.solutions;
    config.threads = threads;
    const LearnedRingParams learned = learn_ring_params(collection.graphs, config, costs);
    RingParamsFile out{collection_name(a.dataset), kind, learned.params, a.mu, seed};
    open_output(a.out, file) << ring_params_to_json(out) << '\n';
    std::fprintf(stderr, "objective %.17g (uniform %.17g), L %zu -> %zu\n", learned.objective,
                 learned.uniform_objective, learned.initial_ring_size, learned.params.ring_size);
    return 0;
  }
  if (a.mode == "ml_model") {
    TrainingMapBudget budget;
    budget.oracle_cap = a.oracle_cap;
    budget.threads = threads;
    const auto maps = generate_training_maps(collection, costs, budget);
    const auto training = build_training_set(collection, maps, a.ring_size, costs, kind);
    const double gamma = 1.0 / static_cast<double>(feature_dimension(a.ring_size));
    SvmTrainingResult result = train_one_class_svm(training, a.nu, gamma);
    result.model.set_distance = kind;
    open_output(a.out, file) << result.model.to_json() << '\n';
    std::fprintf(stderr, "%zu training vectors, %zu support vectors, %zu iterations\n",
                 training.size(), result.model.duals().size(), result.iterations);
    return 0;
  }
  throw ValidationError("unknown training mode '" + a.mode + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Upper bounds for graph edit distance from local structures"};
  app.require_subcommand(1);
  std::uint64_t seed = 0;
  std::size_t threads = 1;
  std::string cost_spec = "constant:1,1,1,1,1,1";
  app.add_option("--seed", seed, "random seed")->capture_default_str();
  app.add_option("--threads", threads, "worker threads")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--costs", cost_spec, "letter | constant:a,b,c,d,e,f")->capture_default_str();

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "write a dataset of random non-isomorphic trees");
  generate->add_option("--min-size", gen.min_size)->capture_default_str();
  generate->add_option("--max-size", gen.max_size)->capture_default_str();
  generate->add_option("--alphabet,-k", gen.alphabet, "node label alphabet size")->capture_default_str();
  generate->add_option("--count", gen.count)->capture_default_str();
  generate->add_option("--out", gen.out, "output file (stdout if omitted)");

  ComputeArgs comp;
  auto* compute = app.add_subcommand("compute", "bounds for all ordered pairs as CSV");
  compute->add_option("--dataset", comp.dataset)->required();
  compute->add_option("--method", comp.method)->capture_default_str();
  compute->add_option("--params", comp.params, "learned ring parameters (JSON)");
  compute->add_option("--model", comp.model, "trained 1-SVM model (JSON)");
  compute->add_option("--solutions,-s", comp.solutions)->capture_default_str();
  compute->add_option("--ring-size,-L", comp.ring_size, "ring size without --params")->capture_default_str();
  compute->add_flag("--greedy-final", comp.greedy_final, "greedy final LSAPE solve");
  compute->add_option("--out", comp.out);

  EvaluateArgs eval;
  auto* evaluate = app.add_subcommand("evaluate", "mean bound, runtime and 1-NN ratio of a CSV");
  evaluate->add_option("--dataset", eval.dataset)->required();
  evaluate->add_option("--bounds", eval.bounds)->required();

  TrainArgs tr;
  auto* train = app.add_subcommand("train", "learn ring parameters or a 1-SVM model");
  train->add_option("--dataset", tr.dataset)->required();
  train->add_option("--mode", tr.mode, "ring_params | ml_model")->capture_default_str();
  train->add_option("--mu", tr.mu)->capture_default_str();
  train->add_option("--restarts", tr.restarts)->capture_default_str();
  train->add_option("--set-distance", tr.set_distance)->capture_default_str();
  train->add_option("--ring-size,-L", tr.ring_size, "ring size of ml features")->capture_default_str();
  train->add_option("--nu", tr.nu)->capture_default_str();
  train->add_option("--oracle-cap", tr.oracle_cap)->capture_default_str();
  train->add_option("--solutions,-s", tr.solutions)->capture_default_str();
  train->add_option("--out", tr.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const CostModelPtr costs = parse_cost_model(cost_spec);
    if (*generate) return run_generate(gen, seed);
    if (*compute) return run_compute(comp, seed, threads, *costs);
    if (*evaluate) return run_evaluate(eval);
    if (*train) return run_train(tr, seed, threads, *costs);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "fatal: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
