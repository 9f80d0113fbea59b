#pragma once

#include <functional>
#include <string>

#include "ringged/costs.hpp"
#include "ringged/edit_model.hpp"
#include "ringged/lsape.hpp"
#include "ringged/ring_distance.hpp"
#include "ringged/rings.hpp"

namespace ringged {

class OneClassSvmModel;

enum class Method { kRingOpt, kRingGd, kRingMs, kRingMl, kBranchLike, kNodeOnly };

std::string to_string(Method method);
/// Accepts ring_opt, ring_gd, ring_ms, ring_ml, branch_like, node_only.
Method parse_method(const std::string& name);

struct HeuristicConfig {
  Method method = Method::kRingOpt;
  std::size_t ring_size = 3;
  AlphaWeights alpha;
  LambdaWeights lambda = LambdaWeights::uniform(3);
  std::size_t num_solutions = 1;
  bool greedy_final_solve = false;
  /// Set distances used inside RING-ML features.
  SetDistanceKind ml_set_distance = SetDistanceKind::kLsapeOptimal;
  /// Workers used to populate the instance.
  std::size_t threads = 1;

  /// Throws ValidationError if L < 1, s < 1, or |lambda| != L for ring methods.
  void validate() const;
  /// Set distance kind implied by a RING method.
  SetDistanceKind set_distance() const;
};

struct UpperBoundResult {
  double bound = 0.0;
  NodeMap map;
  double seconds = 0.0;
};

/// Distance over (V^G + dummy) x (V^H + dummy); (kEpsilon, kEpsilon) is never asked.
using AssignmentDistance = std::function<double(std::size_t u, std::size_t v)>;

/// Builds the (|V^G|+1) x (|V^H|+1) instance cell by cell with corner 0.
LsapeInstance populate_instance_classical(const LabeledGraph& g, const LabeledGraph& h,
                                          const AssignmentDistance& distance,
                                          std::size_t threads = 1);

/// Node cost plus half of the optimal LSAPE distance between the incident edge sets.
double branch_like_distance(const LabeledGraph& g, const LabeledGraph& h, std::size_t u,
                            std::size_t v, const CostModel& costs);

/// Instance for any method. For ring methods the rings of size config.ring_size
/// are built here; RING-ML requires `model`.
LsapeInstance populate_instance(const LabeledGraph& g, const LabeledGraph& h,
                                const HeuristicConfig& config, const CostModel& costs,
                                const OneClassSvmModel* model = nullptr);

/// Same, with rings supplied by the caller (size must match the config).
LsapeInstance populate_instance(const LabeledGraph& g, const LabeledGraph& h,
                                const RingSet& rings_g, const RingSet& rings_h,
                                const HeuristicConfig& config, const CostModel& costs,
                                const OneClassSvmModel* model = nullptr);

/// Solves the instance (s optimal solutions, or one greedy solution) and
/// returns the smallest induced edit cost with its map.
BoundWithMap bound_from_instance(const LabeledGraph& g, const LabeledGraph& h,
                                 const LsapeInstance& instance, const HeuristicConfig& config,
                                 const CostModel& costs);

/// Full pipeline; `seconds` covers ring construction through the final cost.
UpperBoundResult upper_bound(const LabeledGraph& g, const LabeledGraph& h,
                             const HeuristicConfig& config, const CostModel& costs,
                             const OneClassSvmModel* model = nullptr);

}  // namespace ringged
