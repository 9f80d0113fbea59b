#pragma once

#include <array>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "ringged/costs.hpp"
#include "ringged/edit_model.hpp"
#include "ringged/heuristics.hpp"
#include "ringged/lsape.hpp"
#include "ringged/ring_distance.hpp"
#include "ringged/rings.hpp"

namespace ringged {

using FeatureVector = std::vector<double>;

inline constexpr std::size_t kGlobalFeatures = 10;
inline constexpr std::size_t kFeaturesPerLayer = 6;

/// 6 features per layer plus 10 global features.
constexpr std::size_t feature_dimension(std::size_t ring_size) {
  return kFeaturesPerLayer * ring_size + kGlobalFeatures;
}

/// |V^G|, |V^H|, |E^G|, |E^H|, mean node and edge deletion cost over G, mean
/// node and edge insertion cost over H, mean node and edge substitution cost
/// over all G x H pairs.
using GlobalFeatures = std::array<double, kGlobalFeatures>;
GlobalFeatures global_features(const LabeledGraph& g, const LabeledGraph& h, const CostModel& costs);

/// Global features followed by one block per level:
/// (|N^G|-|N^H|, |OE^G|-|OE^H|, |IE^G|-|IE^H|, d(N), d(OE), d(IE)).
/// Either u or v may be kEpsilon, but not both.
FeatureVector extract_features(const LabeledGraph& g, const LabeledGraph& h,
                               const RingSet& rings_g, const RingSet& rings_h, std::size_t u,
                               std::size_t v, const CostModel& costs, SetDistanceKind kind);
FeatureVector extract_features(const GlobalFeatures& globals, const LabeledGraph& g,
                               const LabeledGraph& h, const Ring& ring_u, const Ring& ring_v,
                               const CostModel& costs, SetDistanceKind kind);

/// One-class SVM with RBF kernel, read as a Gaussian mixture likelihood.
class OneClassSvmModel {
 public:
  OneClassSvmModel() = default;
  /// Throws ValidationError on empty/inconsistent vectors, negative duals,
  /// a zero dual sum, or gamma <= 0.
  OneClassSvmModel(std::vector<FeatureVector> support_vectors, std::vector<double> duals,
                   double gamma);

  std::size_t dimension() const { return dim_; }
  double gamma() const { return gamma_; }
  const std::vector<double>& duals() const { return duals_; }
  const std::vector<FeatureVector>& support_vectors() const { return support_vectors_; }
  /// Ring size implied by the dimension.
  std::size_t ring_size() const { return (dim_ - kGlobalFeatures) / kFeaturesPerLayer; }

  /// (gamma/pi)^(d/2) / sum(duals) * sum_i dual_i exp(-gamma |x_i - x|^2),
  /// clamped to [0, 1]. Throws ValidationError on a dimension mismatch.
  double likelihood(std::span<const double> x) const;

  // Optional metadata persisted alongside the model.
  SetDistanceKind set_distance = SetDistanceKind::kLsapeOptimal;
  double nu = 0.5;

  std::string to_json() const;
  static OneClassSvmModel from_json(const std::string& text);
  void save(const std::filesystem::path& path) const;
  static OneClassSvmModel load(const std::filesystem::path& path);

 private:
  std::vector<FeatureVector> support_vectors_;
  std::vector<double> duals_;
  double gamma_ = 1.0;
  std::size_t dim_ = 0;
};

struct SvmTrainingOptions {
  double tolerance = 1e-3;
  std::size_t max_iterations = 100000;
};

struct SvmTrainingResult {
  OneClassSvmModel model;
  std::vector<double> duals;  // one per training vector, sums to 1
  double upper_bound = 0.0;   // 1 / (nu * |T|)
  double max_violation = 0.0;
  std::size_t iterations = 0;
};

/// SMO on the nu-one-class dual: min 1/2 a'Ka s.t. 0 <= a_i <= 1/(nu n), sum a = 1.
SvmTrainingResult train_one_class_svm(std::span<const FeatureVector> training, double nu,
                                      double gamma, const SvmTrainingOptions& options = {});

/// Cells are 1 - likelihood of the assignment's feature vector.
LsapeInstance populate_instance_ml(const LabeledGraph& g, const LabeledGraph& h,
                                   const OneClassSvmModel& model, const RingSet& rings_g,
                                   const RingSet& rings_h, const CostModel& costs,
                                   SetDistanceKind kind, std::size_t threads = 1);

struct TrainingMapBudget {
  std::size_t oracle_cap = 12;  // |V^G| + |V^H| limit for exact maps
  HeuristicConfig fallback{};    // used above the cap; num_solutions set to 10 by default
  std::size_t threads = 1;

  TrainingMapBudget() { fallback.num_solutions = 10; }
};

struct TrainingMap {
  std::size_t g_index;
  std::size_t h_index;
  NodeMap map;
  double cost;
  bool exact;
};

/// One map per ordered pair G != H: exact below the oracle cap, otherwise the
/// fallback heuristic's best map.
std::vector<TrainingMap> generate_training_maps(const GraphCollection& collection,
                                                const CostModel& costs,
                                                const TrainingMapBudget& budget = {});

/// Feature vectors of every assignment (including insertions) in the maps.
std::vector<FeatureVector> build_training_set(const GraphCollection& collection,
                                              std::span<const TrainingMap> maps,
                                              std::size_t ring_size, const CostModel& costs,
                                              SetDistanceKind kind);

}  // namespace ringged
