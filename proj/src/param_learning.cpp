#include "ringged/param_learning.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "ringged/error.hpp"
#include "ringged/parallel.hpp"
#include "ringged/rings.hpp"

namespace ringged {
namespace {

std::vector<std::pair<std::size_t, std::size_t>> ordered_pairs(std::size_t count) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j) {
      if (i != j) pairs.emplace_back(i, j);
    }
  }
  return pairs;
}

std::vector<double> dirichlet_ones(std::size_t dim, std::mt19937_64& rng) {
  std::exponential_distribution<double> exp1(1.0);
  std::vector<double> w(dim);
  double sum = 0.0;
  for (double& x : w) {
    x = exp1(rng);
    sum += x;
  }
  for (double& x : w) x /= sum;
  return w;
}

// Zeroes weights at or below the support threshold, renormalizes, and drops
// the unsupported tail.
std::vector<double> clean_lambda(std::vector<double> lambda) {
  double sum = 0.0;
  for (double& x : lambda) {
    if (x <= kSupportThreshold) x = 0.0;
    sum += x;
  }
  for (double& x : lambda) x /= sum;
  while (!lambda.empty() && lambda.back() == 0.0) lambda.pop_back();
  return lambda;
}

struct Point {
  std::array<double, 3> alpha;
  std::vector<double> lambda;  // full length
  double value;
};

class Search {
 public:
  Search(const RingObjective& objective, double mu) : objective_(objective), mu_(mu) {}

  double evaluate(const std::array<double, 3>& alpha, const std::vector<double>& lambda) {
    ++evaluations;
    const LambdaWeights cleaned(clean_lambda(lambda));
    AlphaWeights a;
    a.values = alpha;
    return objective_.bound_sum(a, cleaned) *
           objective_multiplier(cleaned, cleaned.size(), mu_);
  }

  Point descend(std::array<double, 3> alpha, std::vector<double> lambda) {
    lambda = clean_lambda(std::move(lambda));
    lambda.resize(objective_.max_ring_size(), 0.0);
    Point best{alpha, lambda, evaluate(alpha, lambda)};
    for (double delta = 0.25; delta >= 1e-3; delta /= 2) {
      bool improved = true;
      while (improved) {
        improved = false;
        improved |= sweep(best, delta, true);
        improved |= sweep(best, delta, false);
      }
    }
    return best;
  }

  std::size_t evaluations = 0;

 private:
  // Moves up to delta of mass from coordinate b to coordinate a.
  bool sweep(Point& best, double delta, bool on_alpha) {
    bool improved = false;
    const std::size_t dim = on_alpha ? 3 : best.lambda.size();
    for (std::size_t a = 0; a < dim; ++a) {
      for (std::size_t b = 0; b < dim; ++b) {
        if (a == b) continue;
        Point trial = best;
        double* w = on_alpha ? trial.alpha.data() : trial.lambda.data();
        const double t = std::min(delta, w[b]);
        if (t <= 0.0) continue;
        w[a] += t;
        w[b] = t == w[b] ? 0.0 : w[b] - t;
        if (!on_alpha) {
          trial.lambda = clean_lambda(trial.lambda);
          trial.lambda.resize(best.lambda.size(), 0.0);
        }
        trial.value = evaluate(trial.alpha, trial.lambda);
        if (trial.value < best.value) {
          best = std::move(trial);
          improved = true;
        }
      }
    }
    return improved;
  }

  const RingObjective& objective_;
  double mu_;
};

}  // namespace

void RingParams::validate() const {
  if (ring_size < 1) throw ValidationError("ring size L must be at least 1");
  check_simplex(alpha.values, "alpha");
  check_simplex(lambda.values, "lambda");
  if (lambda.size() != ring_size) throw ValidationError("|lambda| must equal the ring size L");
}

void TrainingObjectiveConfig::validate() const {
  if (!(mu >= 0.0 && mu <= 1.0)) throw ValidationError("mu must lie in [0, 1]");
  if (num_solutions < 1) throw ValidationError("number of solutions must be at least 1");
}

std::size_t support_size(const LambdaWeights& lambda) {
  return static_cast<std::size_t>(std::count_if(lambda.values.begin(), lambda.values.end(),
                                                [](double x) { return x > kSupportThreshold; }));
}

std::size_t effective_ring_size(const LambdaWeights& lambda) {
  for (std::size_t l = lambda.size(); l > 0; --l) {
    if (lambda.values[l - 1] > kSupportThreshold) return l;
  }
  return 0;
}

double objective_multiplier(const LambdaWeights& lambda, std::size_t ring_size, double mu) {
  const double supp = static_cast<double>(support_size(lambda));
  const double denom = std::max(1.0, static_cast<double>(ring_size) - 1.0);
  return mu + (1.0 - mu) * (supp - 1.0) / denom;
}

Method ring_method_for(SetDistanceKind kind) {
  switch (kind) {
    case SetDistanceKind::kLsapeGreedy: return Method::kRingGd;
    case SetDistanceKind::kMultiset: return Method::kRingMs;
    default: return Method::kRingOpt;
  }
}

double objective_f(const std::vector<LabeledGraph>& training, const RingParams& params,
                   const TrainingObjectiveConfig& config, const CostModel& costs) {
  params.validate();
  config.validate();
  HeuristicConfig hc;
  hc.method = ring_method_for(config.kind);
  hc.ring_size = params.ring_size;
  hc.alpha = params.alpha;
  hc.lambda = params.lambda;
  hc.num_solutions = config.num_solutions;
  const auto pairs = ordered_pairs(training.size());
  std::vector<double> bounds(pairs.size());
  parallel_for(pairs.size(), config.threads, [&](std::size_t p) {
    bounds[p] = upper_bound(training[pairs[p].first], training[pairs[p].second], hc, costs).bound;
  });
  double sum = 0.0;
  for (double b : bounds) sum += b;
  return objective_multiplier(params.lambda, params.ring_size, config.mu) * sum;
}

RingObjective::RingObjective(const std::vector<LabeledGraph>& training, std::size_t max_ring_size,
                             const TrainingObjectiveConfig& config, const CostModel& costs)
    : training_(training), costs_(costs), config_(config), max_ring_size_(max_ring_size) {
  config_.validate();
  if (max_ring_size_ < 1) throw ValidationError("ring size L must be at least 1");
  std::vector<RingSet> rings;
  rings.reserve(training.size());
  for (const auto& g : training) rings.push_back(build_all_rings(g, max_ring_size_));
  for (const auto& [i, j] : ordered_pairs(training.size())) {
    pairs_.push_back({i, j, training[i].num_nodes(), training[j].num_nodes(), {}});
  }
  parallel_for(pairs_.size(), config_.threads, [&](std::size_t p) {
    PairTerms& pt = pairs_[p];
    const LabeledGraph& g = training_[pt.g];
    const LabeledGraph& h = training_[pt.h];
    pt.terms.resize((pt.rows + 1) * (pt.cols + 1) * max_ring_size_);
    for (std::size_t i = 0; i <= pt.rows; ++i) {
      const Ring& rg = rings[pt.g].at(i < pt.rows ? i : kEpsilon);
      for (std::size_t k = 0; k <= pt.cols; ++k) {
        if (i == pt.rows && k == pt.cols) continue;
        const Ring& rh = rings[pt.h].at(k < pt.cols ? k : kEpsilon);
        for (std::size_t l = 0; l < max_ring_size_; ++l) {
          pt.terms[(i * (pt.cols + 1) + k) * max_ring_size_ + l] =
              layer_terms(g, h, rg.layers[l], rh.layers[l], config_.kind, costs_);
        }
      }
    }
  });
}

double RingObjective::bound_sum(const AlphaWeights& alpha, const LambdaWeights& lambda) const {
  if (lambda.size() > max_ring_size_) throw ValidationError("|lambda| exceeds the cached ring size");
  std::vector<double> bounds(pairs_.size());
  parallel_for(pairs_.size(), config_.threads, [&](std::size_t p) {
    const PairTerms& pt = pairs_[p];
    LsapeInstance c(pt.rows, pt.cols);
    for (std::size_t i = 0; i <= pt.rows; ++i) {
      for (std::size_t k = 0; k <= pt.cols; ++k) {
        if (i == pt.rows && k == pt.cols) continue;
        const LayerTerms* t = &pt.terms[(i * (pt.cols + 1) + k) * max_ring_size_];
        double d = 0.0;
        for (std::size_t l = 0; l < lambda.size(); ++l) {
          if (lambda.values[l] == 0.0) continue;
          d += lambda.values[l] * t[l].weighted(alpha);
        }
        c(i, k) = d;
      }
    }
    const auto solutions = enumerate_optimal(c, config_.num_solutions);
    bounds[p] = upper_bound_from_solutions(training_[pt.g], training_[pt.h], solutions, costs_).bound;
  });
  double sum = 0.0;
  for (double b : bounds) sum += b;
  return sum;
}

double RingObjective::operator()(const AlphaWeights& alpha, const LambdaWeights& lambda) const {
  return bound_sum(alpha, lambda) * objective_multiplier(lambda, lambda.size(), config_.mu);
}

LearnedRingParams learn_ring_params(const std::vector<LabeledGraph>& training,
                                    const TrainingObjectiveConfig& config, const CostModel& costs) {
  if (training.empty()) throw ValidationError("training set is empty");
  config.validate();
  std::size_t max_diameter = 0;
  for (const auto& g : training) max_diameter = std::max(max_diameter, diameter(g));
  const std::size_t l0 = 1 + max_diameter;

  const RingObjective objective(training, l0, config, costs);
  Search search(objective, config.mu);

  LearnedRingParams out;
  out.initial_ring_size = l0;
  out.uniform_objective = objective(AlphaWeights{}, LambdaWeights::uniform(l0));

  std::mt19937_64 rng(config.seed);
  std::vector<std::pair<std::array<double, 3>, std::vector<double>>> starts;
  starts.emplace_back(AlphaWeights{}.values, LambdaWeights::uniform(l0).values);
  for (std::size_t r = 0; r < config.restarts; ++r) {
    const auto a = dirichlet_ones(3, rng);
    starts.emplace_back(std::array<double, 3>{a[0], a[1], a[2]}, dirichlet_ones(l0, rng));
  }

  std::optional<Point> best;
  for (auto& [alpha, lambda] : starts) {
    Point p = search.descend(alpha, lambda);
    if (!best || p.value < best->value) best = std::move(p);
  }

  const std::vector<double> lambda = clean_lambda(best->lambda);
  out.params.ring_size = lambda.size();
  out.params.alpha.values = best->alpha;
  out.params.lambda = LambdaWeights(lambda);
  out.objective = best->value;
  out.evaluations = search.evaluations + 1;
  return out;
}

std::string ring_params_to_json(const RingParamsFile& file) {
  nlohmann::json doc;
  doc["collection"] = file.collection;
  doc["set_distance"] = to_string(file.kind);
  doc["L"] = file.params.ring_size;
  doc["alpha"] = file.params.alpha.values;
  doc["lambda"] = file.params.lambda.values;
  doc["mu"] = file.mu;
  doc["seed"] = file.seed;
  return doc.dump(2);
}

RingParamsFile ring_params_from_json(const std::string& text) {
  try {
    const auto doc = nlohmann::json::parse(text);
    RingParamsFile file;
    file.collection = doc.value("collection", std::string{});
    if (doc.contains("set_distance")) {
      file.kind = parse_set_distance_kind(doc.at("set_distance").get<std::string>());
    }
    file.params.ring_size = doc.at("L").get<std::size_t>();
    file.params.alpha = AlphaWeights(doc.at("alpha").get<std::array<double, 3>>());
    file.params.lambda = LambdaWeights(doc.at("lambda").get<std::vector<double>>());
    file.mu = doc.value("mu", 1.0);
    file.seed = doc.value("seed", std::uint64_t{0});
    file.params.validate();
    return file;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("params parse error: ") + e.what());
  }
}

void save_ring_params(const RingParamsFile& file, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write '" + path.string() + "'");
  out << ring_params_to_json(file) << '\n';
}

RingParamsFile load_ring_params(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open params '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ring_params_from_json(buffer.str());
}

}  // namespace ringged
