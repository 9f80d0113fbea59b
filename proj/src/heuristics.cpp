#include "ringged/heuristics.hpp"

#include <chrono>

#include "ringged/error.hpp"
#include "ringged/ml.hpp"
#include "ringged/parallel.hpp"

namespace ringged {
namespace {

bool is_ring_method(Method m) {
  return m == Method::kRingOpt || m == Method::kRingGd || m == Method::kRingMs || m == Method::kRingMl;
}

std::vector<std::size_t> incident_edges(const LabeledGraph& g, std::size_t u) {
  std::vector<std::size_t> edges;
  if (u == kEpsilon) return edges;
  for (const auto& inc : g.incident(u)) edges.push_back(inc.edge);
  return edges;
}

}  // namespace

std::string to_string(Method method) {
  switch (method) {
    case Method::kRingOpt: return "ring_opt";
    case Method::kRingGd: return "ring_gd";
    case Method::kRingMs: return "ring_ms";
    case Method::kRingMl: return "ring_ml";
    case Method::kBranchLike: return "branch_like";
    case Method::kNodeOnly: return "node_only";
  }
  return "?";
}

Method parse_method(const std::string& name) {
  for (Method m : {Method::kRingOpt, Method::kRingGd, Method::kRingMs, Method::kRingMl,
                   Method::kBranchLike, Method::kNodeOnly}) {
    if (to_string(m) == name) return m;
  }
  throw ValidationError("unknown method '" + name + "'");
}

void HeuristicConfig::validate() const {
  if (ring_size < 1) throw ValidationError("ring size L must be at least 1");
  if (num_solutions < 1) throw ValidationError("number of solutions must be at least 1");
  check_simplex(alpha.values, "alpha");
  if (method != Method::kRingMl && is_ring_method(method)) {
    check_simplex(lambda.values, "lambda");
    if (lambda.size() != ring_size) throw ValidationError("|lambda| must equal the ring size L");
  }
}

SetDistanceKind HeuristicConfig::set_distance() const {
  switch (method) {
    case Method::kRingGd: return SetDistanceKind::kLsapeGreedy;
    case Method::kRingMs: return SetDistanceKind::kMultiset;
    case Method::kRingMl: return ml_set_distance;
    default: return SetDistanceKind::kLsapeOptimal;
  }
}

LsapeInstance populate_instance_classical(const LabeledGraph& g, const LabeledGraph& h,
                                          const AssignmentDistance& distance,
                                          std::size_t threads) {
  const std::size_t n = g.num_nodes(), m = h.num_nodes();
  LsapeInstance c(n, m);
  parallel_for(n + 1, threads, [&](std::size_t i) {
    const std::size_t u = i < n ? i : kEpsilon;
    for (std::size_t k = 0; k <= m; ++k) {
      const std::size_t v = k < m ? k : kEpsilon;
      if (u == kEpsilon && v == kEpsilon) continue;
      c(i, k) = distance(u, v);
    }
  });
  return c;
}

double branch_like_distance(const LabeledGraph& g, const LabeledGraph& h, std::size_t u,
                            std::size_t v, const CostModel& costs) {
  const auto edges_g = incident_edges(g, u);
  const auto edges_h = incident_edges(h, v);
  return node_cost(costs, g, u, h, v) +
         0.5 * edge_set_distance_lsape(g, h, edges_g, edges_h, costs, false);
}

LsapeInstance populate_instance(const LabeledGraph& g, const LabeledGraph& h,
                                const RingSet& rings_g, const RingSet& rings_h,
                                const HeuristicConfig& config, const CostModel& costs,
                                const OneClassSvmModel* model) {
  config.validate();
  switch (config.method) {
    case Method::kNodeOnly:
      return populate_instance_classical(
          g, h, [&](std::size_t u, std::size_t v) { return node_cost(costs, g, u, h, v); },
          config.threads);
    case Method::kBranchLike:
      return populate_instance_classical(
          g, h, [&](std::size_t u, std::size_t v) { return branch_like_distance(g, h, u, v, costs); },
          config.threads);
    case Method::kRingMl:
      if (model == nullptr) throw ValidationError("method ring_ml needs a trained model");
      return populate_instance_ml(g, h, *model, rings_g, rings_h, costs, config.set_distance(),
                                  config.threads);
    default: {
      const SetDistanceKind kind = config.set_distance();
      return populate_instance_classical(
          g, h,
          [&](std::size_t u, std::size_t v) {
            return ring_distance(g, h, rings_g.at(u), rings_h.at(v), config.alpha, config.lambda,
                                 kind, costs);
          },
          config.threads);
    }
  }
}

LsapeInstance populate_instance(const LabeledGraph& g, const LabeledGraph& h,
                                const HeuristicConfig& config, const CostModel& costs,
                                const OneClassSvmModel* model) {
  config.validate();
  if (!is_ring_method(config.method)) return populate_instance(g, h, {}, {}, config, costs, model);
  std::size_t size = config.ring_size;
  if (config.method == Method::kRingMl) {
    if (model == nullptr) throw ValidationError("method ring_ml needs a trained model");
    size = model->ring_size();
  }
  return populate_instance(g, h, build_all_rings(g, size), build_all_rings(h, size), config, costs,
                           model);
}

BoundWithMap bound_from_instance(const LabeledGraph& g, const LabeledGraph& h,
                                 const LsapeInstance& instance, const HeuristicConfig& config,
                                 const CostModel& costs) {
  if (config.greedy_final_solve) {
    const NodeMap map = solve_greedy(instance).assignment;
    return {induced_edit_cost(g, h, map, costs), map};
  }
  const auto solutions = enumerate_optimal(instance, config.num_solutions);
  return upper_bound_from_solutions(g, h, solutions, costs);
}

UpperBoundResult upper_bound(const LabeledGraph& g, const LabeledGraph& h,
                             const HeuristicConfig& config, const CostModel& costs,
                             const OneClassSvmModel* model) {
  const auto start = std::chrono::steady_clock::now();
  const LsapeInstance instance = populate_instance(g, h, config, costs, model);
  BoundWithMap best = bound_from_instance(g, h, instance, config, costs);
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  return {best.bound, std::move(best.map), elapsed.count()};
}

}  // namespace ringged
