#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "ringged/costs.hpp"
#include "ringged/graph.hpp"
#include "ringged/rings.hpp"

namespace ringged {

enum class SetDistanceKind { kLsapeOptimal, kLsapeGreedy, kMultiset };

std::string to_string(SetDistanceKind kind);
/// Accepts "lsape_optimal", "lsape_greedy", "multiset".
SetDistanceKind parse_set_distance_kind(const std::string& name);

/// Weights for the node, inner-edge, and outer-edge terms of a layer distance.
struct AlphaWeights {
  std::array<double, 3> values{1.0 / 3, 1.0 / 3, 1.0 / 3};

  AlphaWeights() = default;
  /// Throws ValidationError unless the values are a simplex vector.
  explicit AlphaWeights(std::array<double, 3> v);
  double nodes() const { return values[0]; }
  double inner() const { return values[1]; }
  double outer() const { return values[2]; }
};

/// Per-level weights of a ring distance; a simplex vector of length L.
struct LambdaWeights {
  std::vector<double> values;

  LambdaWeights() = default;
  explicit LambdaWeights(std::vector<double> v);
  static LambdaWeights uniform(std::size_t size);
  std::size_t size() const { return values.size(); }
};

/// Throws ValidationError unless `w` is non-negative and sums to 1 (1e-9).
void check_simplex(std::span<const double> w, const char* what);

// Node and edge set distances. Node sets hold node indices, edge sets edge
// indices of the respective graph.

double node_set_distance_lsape(const LabeledGraph& g, const LabeledGraph& h,
                               std::span<const std::size_t> nodes_g,
                               std::span<const std::size_t> nodes_h, const CostModel& costs,
                               bool greedy);
double edge_set_distance_lsape(const LabeledGraph& g, const LabeledGraph& h,
                               std::span<const std::size_t> edges_g,
                               std::span<const std::size_t> edges_h, const CostModel& costs,
                               bool greedy);
double node_set_distance_multiset(const LabeledGraph& g, const LabeledGraph& h,
                                  std::span<const std::size_t> nodes_g,
                                  std::span<const std::size_t> nodes_h, const CostModel& costs);
double edge_set_distance_multiset(const LabeledGraph& g, const LabeledGraph& h,
                                  std::span<const std::size_t> edges_g,
                                  std::span<const std::size_t> edges_h, const CostModel& costs);

double node_set_distance(SetDistanceKind kind, const LabeledGraph& g, const LabeledGraph& h,
                         std::span<const std::size_t> nodes_g,
                         std::span<const std::size_t> nodes_h, const CostModel& costs);
double edge_set_distance(SetDistanceKind kind, const LabeledGraph& g, const LabeledGraph& h,
                         std::span<const std::size_t> edges_g,
                         std::span<const std::size_t> edges_h, const CostModel& costs);

/// The three size-normalized terms of a layer distance, before weighting.
struct LayerTerms {
  double nodes = 0.0;
  double inner = 0.0;
  double outer = 0.0;

  double weighted(const AlphaWeights& alpha) const {
    return alpha.nodes() * nodes + alpha.inner() * inner + alpha.outer() * outer;
  }
};

LayerTerms layer_terms(const LabeledGraph& g, const LabeledGraph& h, const Layer& layer_g,
                       const Layer& layer_h, SetDistanceKind kind, const CostModel& costs);

double layer_distance(const LabeledGraph& g, const LabeledGraph& h, const Layer& layer_g,
                      const Layer& layer_h, const AlphaWeights& alpha, SetDistanceKind kind,
                      const CostModel& costs);

/// Sum over levels of lambda_l times the layer distance; levels with zero
/// weight are skipped. Throws ValidationError if ring sizes differ from |lambda|.
double ring_distance(const LabeledGraph& g, const LabeledGraph& h, const Ring& ring_g,
                     const Ring& ring_h, const AlphaWeights& alpha, const LambdaWeights& lambda,
                     SetDistanceKind kind, const CostModel& costs);

}  // namespace ringged
