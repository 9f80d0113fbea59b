#include "ringged/ml.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "ringged/error.hpp"
#include "ringged/exact.hpp"
#include "ringged/parallel.hpp"

namespace ringged {
namespace {

double mean_or_zero(double sum, std::size_t count) {
  return count == 0 ? 0.0 : sum / static_cast<double>(count);
}

double squared_distance(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

// Lazily computed RBF kernel rows; dropped wholesale once the budget is hit.
class KernelRows {
 public:
  KernelRows(std::span<const FeatureVector> x, double gamma) : x_(x), gamma_(gamma), rows_(x.size()) {
    budget_ = std::max<std::size_t>(4, (std::size_t{1} << 25) / std::max<std::size_t>(1, x.size()));
  }

  const std::vector<double>& row(std::size_t i) {
    if (rows_[i].empty()) {
      if (cached_ >= budget_) {
        for (auto& r : rows_) std::vector<double>().swap(r);
        cached_ = 0;
      }
      rows_[i].resize(x_.size());
      for (std::size_t j = 0; j < x_.size(); ++j) {
        rows_[i][j] = std::exp(-gamma_ * squared_distance(x_[i], x_[j]));
      }
      ++cached_;
    }
    return rows_[i];
  }

 private:
  std::span<const FeatureVector> x_;
  double gamma_;
  std::vector<std::vector<double>> rows_;
  std::size_t budget_;
  std::size_t cached_ = 0;
};

}  // namespace

GlobalFeatures global_features(const LabeledGraph& g, const LabeledGraph& h, const CostModel& costs) {
  GlobalFeatures f{};
  f[0] = static_cast<double>(g.num_nodes());
  f[1] = static_cast<double>(h.num_nodes());
  f[2] = static_cast<double>(g.num_edges());
  f[3] = static_cast<double>(h.num_edges());
  double s = 0.0;
  for (const auto& l : g.node_labels()) s += costs.node_deletion(l);
  f[4] = mean_or_zero(s, g.num_nodes());
  s = 0.0;
  for (const auto& e : g.edges()) s += costs.edge_deletion(e.label);
  f[5] = mean_or_zero(s, g.num_edges());
  s = 0.0;
  for (const auto& l : h.node_labels()) s += costs.node_insertion(l);
  f[6] = mean_or_zero(s, h.num_nodes());
  s = 0.0;
  for (const auto& e : h.edges()) s += costs.edge_insertion(e.label);
  f[7] = mean_or_zero(s, h.num_edges());
  s = 0.0;
  for (const auto& a : g.node_labels()) {
    for (const auto& b : h.node_labels()) s += costs.node_substitution(a, b);
  }
  f[8] = mean_or_zero(s, g.num_nodes() * h.num_nodes());
  s = 0.0;
  for (const auto& e : g.edges()) {
    for (const auto& f2 : h.edges()) s += costs.edge_substitution(e.label, f2.label);
  }
  f[9] = mean_or_zero(s, g.num_edges() * h.num_edges());
  return f;
}

FeatureVector extract_features(const GlobalFeatures& globals, const LabeledGraph& g,
                               const LabeledGraph& h, const Ring& ring_u, const Ring& ring_v,
                               const CostModel& costs, SetDistanceKind kind) {
  if (ring_u.size() != ring_v.size()) throw ValidationError("ring sizes differ");
  if (ring_u.root == kEpsilon && ring_v.root == kEpsilon) {
    throw ValidationError("features of the dummy-dummy assignment are undefined");
  }
  FeatureVector x(globals.begin(), globals.end());
  x.reserve(feature_dimension(ring_u.size()));
  auto diff = [](std::size_t a, std::size_t b) {
    return static_cast<double>(a) - static_cast<double>(b);
  };
  for (std::size_t l = 0; l < ring_u.size(); ++l) {
    const Layer& a = ring_u.layers[l];
    const Layer& b = ring_v.layers[l];
    x.push_back(diff(a.nodes.size(), b.nodes.size()));
    x.push_back(diff(a.outer_edges.size(), b.outer_edges.size()));
    x.push_back(diff(a.inner_edges.size(), b.inner_edges.size()));
    x.push_back(node_set_distance(kind, g, h, a.nodes, b.nodes, costs));
    x.push_back(edge_set_distance(kind, g, h, a.outer_edges, b.outer_edges, costs));
    x.push_back(edge_set_distance(kind, g, h, a.inner_edges, b.inner_edges, costs));
  }
  return x;
}

FeatureVector extract_features(const LabeledGraph& g, const LabeledGraph& h,
                               const RingSet& rings_g, const RingSet& rings_h, std::size_t u,
                               std::size_t v, const CostModel& costs, SetDistanceKind kind) {
  return extract_features(global_features(g, h, costs), g, h, rings_g.at(u), rings_h.at(v), costs,
                          kind);
}

OneClassSvmModel::OneClassSvmModel(std::vector<FeatureVector> support_vectors,
                                   std::vector<double> duals, double gamma)
    : support_vectors_(std::move(support_vectors)), duals_(std::move(duals)), gamma_(gamma) {
  if (support_vectors_.empty()) throw ValidationError("model needs at least one support vector");
  if (support_vectors_.size() != duals_.size()) throw ValidationError("one dual per support vector");
  if (!(gamma_ > 0.0)) throw ValidationError("gamma must be positive");
  dim_ = support_vectors_.front().size();
  double sum = 0.0;
  for (std::size_t i = 0; i < duals_.size(); ++i) {
    if (support_vectors_[i].size() != dim_) throw ValidationError("support vectors differ in dimension");
    if (!(duals_[i] >= 0.0)) throw ValidationError("duals must be non-negative");
    sum += duals_[i];
  }
  if (!(sum > 0.0)) throw ValidationError("duals must not all be zero");
}

double OneClassSvmModel::likelihood(std::span<const double> x) const {
  if (x.size() != dim_) {
    throw ValidationError("feature dimension " + std::to_string(x.size()) + " differs from model dimension " +
                          std::to_string(dim_));
  }
  // Evaluated in log space; the normalizer alone underflows for large d.
  double dual_sum = 0.0;
  double max_term = -std::numeric_limits<double>::infinity();
  std::vector<double> terms(duals_.size());
  for (std::size_t i = 0; i < duals_.size(); ++i) {
    dual_sum += duals_[i];
    terms[i] = duals_[i] > 0.0 ? std::log(duals_[i]) - gamma_ * squared_distance(support_vectors_[i], x)
                               : -std::numeric_limits<double>::infinity();
    max_term = std::max(max_term, terms[i]);
  }
  if (max_term == -std::numeric_limits<double>::infinity()) return 0.0;
  double acc = 0.0;
  for (double t : terms) acc += std::exp(t - max_term);
  const double log_p = 0.5 * static_cast<double>(dim_) * std::log(gamma_ / std::numbers::pi) -
                       std::log(dual_sum) + max_term + std::log(acc);
  return std::clamp(std::exp(std::min(log_p, 0.0)), 0.0, 1.0);
}

std::string OneClassSvmModel::to_json() const {
  nlohmann::json doc;
  doc["gamma"] = gamma_;
  doc["dim"] = dim_;
  doc["duals"] = duals_;
  doc["support_vectors"] = support_vectors_;
  doc["nu"] = nu;
  doc["set_distance"] = to_string(set_distance);
  return doc.dump();
}

OneClassSvmModel OneClassSvmModel::from_json(const std::string& text) {
  try {
    const auto doc = nlohmann::json::parse(text);
    OneClassSvmModel m(doc.at("support_vectors").get<std::vector<FeatureVector>>(),
                       doc.at("duals").get<std::vector<double>>(), doc.at("gamma").get<double>());
    if (doc.contains("dim") && doc.at("dim").get<std::size_t>() != m.dim_) {
      throw ValidationError("model 'dim' does not match its support vectors");
    }
    if (m.dim_ < kGlobalFeatures + kFeaturesPerLayer || (m.dim_ - kGlobalFeatures) % kFeaturesPerLayer != 0) {
      throw ValidationError("model dimension is not of the form 6L+10");
    }
    if (doc.contains("nu")) m.nu = doc.at("nu").get<double>();
    if (doc.contains("set_distance")) {
      m.set_distance = parse_set_distance_kind(doc.at("set_distance").get<std::string>());
    }
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("model parse error: ") + e.what());
  }
}

void OneClassSvmModel::save(const std::filesystem::path& path) const {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write '" + path.string() + "'");
  out << to_json() << '\n';
}

OneClassSvmModel OneClassSvmModel::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open model '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return from_json(buffer.str());
}

SvmTrainingResult train_one_class_svm(std::span<const FeatureVector> training, double nu,
                                      double gamma, const SvmTrainingOptions& options) {
  if (training.empty()) throw ValidationError("training set is empty");
  if (!(nu > 0.0 && nu <= 1.0)) throw ValidationError("nu must lie in (0, 1]");
  if (!(gamma > 0.0)) throw ValidationError("gamma must be positive");
  const std::size_t n = training.size();
  const std::size_t dim = training.front().size();
  for (const auto& x : training) {
    if (x.size() != dim) throw ValidationError("training vectors differ in dimension");
  }
  const double cap = 1.0 / (nu * static_cast<double>(n));

  // Feasible start: fill duals up to the cap in index order.
  std::vector<double> alpha(n, 0.0);
  double remaining = 1.0;
  for (std::size_t i = 0; i < n && remaining > 0.0; ++i) {
    alpha[i] = std::min(cap, remaining);
    remaining -= alpha[i];
  }

  KernelRows kernel(training, gamma);
  std::vector<double> grad(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    if (alpha[j] == 0.0) continue;
    const auto& row = kernel.row(j);
    for (std::size_t k = 0; k < n; ++k) grad[k] += alpha[j] * row[k];
  }

  SvmTrainingResult result;
  result.upper_bound = cap;
  const double slack = 1e-12 * cap;
  for (; result.iterations < options.max_iterations; ++result.iterations) {
    // Maximal violating pair: i can grow, j can shrink.
    std::size_t up = n, low = n;
    for (std::size_t k = 0; k < n; ++k) {
      if (alpha[k] < cap - slack && (up == n || grad[k] < grad[up])) up = k;
      if (alpha[k] > slack && (low == n || grad[k] > grad[low])) low = k;
    }
    result.max_violation = (up == n || low == n) ? 0.0 : grad[low] - grad[up];
    if (result.max_violation < options.tolerance) break;

    const auto& row_up = kernel.row(up);
    const double k_ul = row_up[low];
    const std::vector<double> row_low = kernel.row(low);
    const double curvature = std::max(2.0 - 2.0 * k_ul, 1e-12);
    const double step = std::min({result.max_violation / curvature, cap - alpha[up], alpha[low]});
    alpha[up] += step;
    alpha[low] -= step;
    const auto& row_up_again = kernel.row(up);
    for (std::size_t k = 0; k < n; ++k) grad[k] += step * (row_up_again[k] - row_low[k]);
  }

  double sum = 0.0;
  for (double& a : alpha) {
    a = std::max(a, 0.0);
    sum += a;
  }
  for (double& a : alpha) a /= sum;

  std::vector<FeatureVector> support;
  std::vector<double> duals;
  for (std::size_t i = 0; i < n; ++i) {
    if (alpha[i] > 0.0) {
      support.push_back(training[i]);
      duals.push_back(alpha[i]);
    }
  }
  result.model = OneClassSvmModel(std::move(support), std::move(duals), gamma);
  result.model.nu = nu;
  result.duals = std::move(alpha);
  return result;
}

LsapeInstance populate_instance_ml(const LabeledGraph& g, const LabeledGraph& h,
                                   const OneClassSvmModel& model, const RingSet& rings_g,
                                   const RingSet& rings_h, const CostModel& costs,
                                   SetDistanceKind kind, std::size_t threads) {
  const GlobalFeatures globals = global_features(g, h, costs);
  if (feature_dimension(rings_g.dummy.size()) != model.dimension() ||
      feature_dimension(rings_h.dummy.size()) != model.dimension()) {
    throw ValidationError("ring size does not match the model's feature dimension");
  }
  return populate_instance_classical(
      g, h,
      [&](std::size_t u, std::size_t v) {
        const FeatureVector x = extract_features(globals, g, h, rings_g.at(u), rings_h.at(v), costs, kind);
        return 1.0 - model.likelihood(x);
      },
      threads);
}

std::vector<TrainingMap> generate_training_maps(const GraphCollection& collection,
                                                const CostModel& costs,
                                                const TrainingMapBudget& budget) {
  if (collection.graphs.empty()) throw ValidationError("training collection is empty");
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < collection.graphs.size(); ++i) {
    for (std::size_t j = 0; j < collection.graphs.size(); ++j) {
      if (i != j) pairs.emplace_back(i, j);
    }
  }
  std::vector<TrainingMap> maps(pairs.size());
  parallel_for(pairs.size(), budget.threads, [&](std::size_t p) {
    const auto [i, j] = pairs[p];
    const LabeledGraph& g = collection.graphs[i];
    const LabeledGraph& h = collection.graphs[j];
    if (g.num_nodes() + h.num_nodes() <= budget.oracle_cap) {
      auto exact = exact_ged(g, h, costs, budget.oracle_cap);
      maps[p] = {i, j, std::move(exact.map), exact.bound, true};
    } else {
      auto heuristic = upper_bound(g, h, budget.fallback, costs);
      maps[p] = {i, j, std::move(heuristic.map), heuristic.bound, false};
    }
  });
  return maps;
}

std::vector<FeatureVector> build_training_set(const GraphCollection& collection,
                                              std::span<const TrainingMap> maps,
                                              std::size_t ring_size, const CostModel& costs,
                                              SetDistanceKind kind) {
  std::vector<RingSet> rings;
  rings.reserve(collection.graphs.size());
  for (const auto& g : collection.graphs) rings.push_back(build_all_rings(g, ring_size));
  std::vector<FeatureVector> out;
  for (const auto& tm : maps) {
    const LabeledGraph& g = collection.graphs[tm.g_index];
    const LabeledGraph& h = collection.graphs[tm.h_index];
    const GlobalFeatures globals = global_features(g, h, costs);
    const RingSet& rg = rings[tm.g_index];
    const RingSet& rh = rings[tm.h_index];
    for (std::size_t u = 0; u < g.num_nodes(); ++u) {
      out.push_back(extract_features(globals, g, h, rg.at(u), rh.at(tm.map.row_to_col[u]), costs, kind));
    }
    for (std::size_t v = 0; v < h.num_nodes(); ++v) {
      if (tm.map.col_to_row[v] == kEpsilon) {
        out.push_back(extract_features(globals, g, h, rg.dummy, rh.at(v), costs, kind));
      }
    }
  }
  return out;
}

}  // namespace ringged
