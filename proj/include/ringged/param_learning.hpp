#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "ringged/costs.hpp"
#include "ringged/graph.hpp"
#include "ringged/heuristics.hpp"
#include "ringged/ring_distance.hpp"

namespace ringged {

/// Ring size with its layer and level weights.
struct RingParams {
  std::size_t ring_size = 3;
  AlphaWeights alpha;
  LambdaWeights lambda = LambdaWeights::uniform(3);

  /// Throws ValidationError unless both weight vectors are simplex vectors
  /// and |lambda| == ring_size >= 1.
  void validate() const;
};

struct TrainingObjectiveConfig {
  double mu = 1.0;
  SetDistanceKind kind = SetDistanceKind::kLsapeOptimal;
  std::size_t restarts = 4;  // random simplex starts besides the uniform one
  std::uint64_t seed = 0;
  std::size_t num_solutions = 1;
  std::size_t threads = 1;

  /// Throws ValidationError unless mu lies in [0, 1] and num_solutions >= 1.
  void validate() const;
};

/// Levels whose weight exceeds this count as support.
inline constexpr double kSupportThreshold = 1e-6;

/// Number of levels l with lambda_l > kSupportThreshold.
std::size_t support_size(const LambdaWeights& lambda);
/// 1 + the largest supported level (0 when nothing is supported).
std::size_t effective_ring_size(const LambdaWeights& lambda);

/// mu + (1 - mu) * (|supp lambda| - 1) / max(1, L - 1).
double objective_multiplier(const LambdaWeights& lambda, std::size_t ring_size, double mu);

/// RING method computing bounds with the given set distance.
Method ring_method_for(SetDistanceKind kind);

/// Multiplier times the sum of RING bounds over all ordered pairs G != H,
/// computed through upper_bound().
double objective_f(const std::vector<LabeledGraph>& training, const RingParams& params,
                   const TrainingObjectiveConfig& config, const CostModel& costs);

/// Precomputes the per-level layer terms of every cell of every training
/// pair once, so evaluating the objective needs no further set distances.
class RingObjective {
 public:
  /// Terms for levels 0..max_ring_size-1.
  RingObjective(const std::vector<LabeledGraph>& training, std::size_t max_ring_size,
                const TrainingObjectiveConfig& config, const CostModel& costs);

  std::size_t max_ring_size() const { return max_ring_size_; }
  std::size_t num_pairs() const { return pairs_.size(); }

  /// Sum of bounds for (alpha, lambda); |lambda| <= max_ring_size.
  double bound_sum(const AlphaWeights& alpha, const LambdaWeights& lambda) const;
  /// Objective with L taken as |lambda|.
  double operator()(const AlphaWeights& alpha, const LambdaWeights& lambda) const;

 private:
  struct PairTerms {
    std::size_t g;
    std::size_t h;
    std::size_t rows;
    std::size_t cols;
    std::vector<LayerTerms> terms;  // ((i * (cols+1)) + k) * max_ring_size + l
  };

  const std::vector<LabeledGraph>& training_;
  const CostModel& costs_;
  TrainingObjectiveConfig config_;
  std::size_t max_ring_size_;
  std::vector<PairTerms> pairs_;
};

struct LearnedRingParams {
  RingParams params;
  double objective = 0.0;          // objective of `params`
  double uniform_objective = 0.0;  // objective at uniform weights and the initial L
  std::size_t initial_ring_size = 0;
  std::size_t evaluations = 0;
};

/// Derivative-free minimization of the objective over alpha and lambda with
/// L = 1 + max diameter, followed by truncating lambda after its support.
/// Throws ValidationError on an empty training set.
LearnedRingParams learn_ring_params(const std::vector<LabeledGraph>& training,
                                    const TrainingObjectiveConfig& config, const CostModel& costs);

struct RingParamsFile {
  std::string collection;
  SetDistanceKind kind = SetDistanceKind::kLsapeOptimal;
  RingParams params;
  double mu = 1.0;
  std::uint64_t seed = 0;
};

std::string ring_params_to_json(const RingParamsFile& file);
RingParamsFile ring_params_from_json(const std::string& text);
void save_ring_params(const RingParamsFile& file, const std::filesystem::path& path);
RingParamsFile load_ring_params(const std::filesystem::path& path);

}  // namespace ringged
