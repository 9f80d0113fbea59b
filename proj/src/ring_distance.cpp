#include "ringged/ring_distance.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ringged/error.hpp"
#include "ringged/lsape.hpp"

namespace ringged {
namespace {

// Unifies node and edge sets for the set-distance routines.
struct NodeSide {
  static const Label& label(const LabeledGraph& g, std::size_t i) { return g.node_label(i); }
  static double sub(const CostModel& c, const Label& a, const Label& b) { return c.node_substitution(a, b); }
  static double del(const CostModel& c, const Label& a) { return c.node_deletion(a); }
  static double ins(const CostModel& c, const Label& b) { return c.node_insertion(b); }
};

struct EdgeSide {
  static const Label& label(const LabeledGraph& g, std::size_t e) { return g.edge(e).label; }
  static double sub(const CostModel& c, const Label& a, const Label& b) { return c.edge_substitution(a, b); }
  static double del(const CostModel& c, const Label& a) { return c.edge_deletion(a); }
  static double ins(const CostModel& c, const Label& b) { return c.edge_insertion(b); }
};

template <class Side>
double lsape_set_distance(const LabeledGraph& g, const LabeledGraph& h,
                          std::span<const std::size_t> set_g, std::span<const std::size_t> set_h,
                          const CostModel& costs, bool greedy) {
  if (set_g.empty() && set_h.empty()) return 0.0;
  LsapeInstance c(set_g.size(), set_h.size());
  for (std::size_t i = 0; i < set_g.size(); ++i) {
    const Label& a = Side::label(g, set_g[i]);
    for (std::size_t k = 0; k < set_h.size(); ++k) c(i, k) = Side::sub(costs, a, Side::label(h, set_h[k]));
    c(i, kEpsilon) = Side::del(costs, a);
  }
  for (std::size_t k = 0; k < set_h.size(); ++k) c(kEpsilon, k) = Side::ins(costs, Side::label(h, set_h[k]));
  return greedy ? solve_greedy(c).cost : solve_optimal(c).cost;
}

template <class Side>
double multiset_set_distance(const LabeledGraph& g, const LabeledGraph& h,
                             std::span<const std::size_t> set_g,
                             std::span<const std::size_t> set_h, const CostModel& costs) {
  const std::size_t ng = set_g.size(), nh = set_h.size();
  if (ng == 0 && nh == 0) return 0.0;
  std::vector<const Label*> labels_g, labels_h;
  labels_g.reserve(ng);
  labels_h.reserve(nh);
  for (std::size_t i : set_g) labels_g.push_back(&Side::label(g, i));
  for (std::size_t k : set_h) labels_h.push_back(&Side::label(h, k));

  double result = 0.0;
  if (ng > nh) {
    double del = 0.0;
    for (const Label* a : labels_g) del += Side::del(costs, *a);
    result += del / static_cast<double>(ng) * static_cast<double>(ng - nh);
  } else if (nh > ng) {
    double ins = 0.0;
    for (const Label* b : labels_h) ins += Side::ins(costs, *b);
    result += ins / static_cast<double>(nh) * static_cast<double>(nh - ng);
  }

  auto by_label = [](const Label* a, const Label* b) { return *a < *b; };
  std::sort(labels_g.begin(), labels_g.end(), by_label);
  std::sort(labels_h.begin(), labels_h.end(), by_label);
  std::size_t common = 0;
  for (std::size_t i = 0, k = 0; i < ng && k < nh;) {
    if (*labels_g[i] < *labels_h[k]) {
      ++i;
    } else if (*labels_h[k] < *labels_g[i]) {
      ++k;
    } else {
      ++common, ++i, ++k;
    }
  }
  const std::size_t substitutions = std::min(ng, nh) - common;
  if (substitutions == 0) return result;

  // Average over differently labeled pairs only.
  double sub = 0.0;
  std::size_t pairs = 0;
  for (const Label* a : labels_g) {
    for (const Label* b : labels_h) {
      if (*a == *b) continue;
      sub += Side::sub(costs, *a, *b);
      ++pairs;
    }
  }
  if (pairs > 0) result += sub / static_cast<double>(pairs) * static_cast<double>(substitutions);
  return result;
}

double normalized(double distance, std::size_t a, std::size_t b) {
  return distance / static_cast<double>(std::max<std::size_t>({a, b, 1}));
}

}  // namespace

std::string to_string(SetDistanceKind kind) {
  switch (kind) {
    case SetDistanceKind::kLsapeOptimal: return "lsape_optimal";
    case SetDistanceKind::kLsapeGreedy: return "lsape_greedy";
    case SetDistanceKind::kMultiset: return "multiset";
  }
  return "?";
}

SetDistanceKind parse_set_distance_kind(const std::string& name) {
  if (name == "lsape_optimal" || name == "opt") return SetDistanceKind::kLsapeOptimal;
  if (name == "lsape_greedy" || name == "gd") return SetDistanceKind::kLsapeGreedy;
  if (name == "multiset" || name == "ms") return SetDistanceKind::kMultiset;
  throw ValidationError("unknown set distance '" + name + "'");
}

void check_simplex(std::span<const double> w, const char* what) {
  if (w.empty()) throw ValidationError(std::string(what) + " must not be empty");
  double sum = 0.0;
  for (double x : w) {
    if (!(x >= 0.0) || !std::isfinite(x)) {
      throw ValidationError(std::string(what) + " must be non-negative");
    }
    sum += x;
  }
  if (std::abs(sum - 1.0) > 1e-9) throw ValidationError(std::string(what) + " must sum to 1");
}

AlphaWeights::AlphaWeights(std::array<double, 3> v) : values(v) { check_simplex(values, "alpha"); }

LambdaWeights::LambdaWeights(std::vector<double> v) : values(std::move(v)) {
  check_simplex(values, "lambda");
}

LambdaWeights LambdaWeights::uniform(std::size_t size) {
  if (size == 0) throw ValidationError("lambda must not be empty");
  return LambdaWeights(std::vector<double>(size, 1.0 / static_cast<double>(size)));
}

double node_set_distance_lsape(const LabeledGraph& g, const LabeledGraph& h,
                               std::span<const std::size_t> nodes_g,
                               std::span<const std::size_t> nodes_h, const CostModel& costs,
                               bool greedy) {
  return lsape_set_distance<NodeSide>(g, h, nodes_g, nodes_h, costs, greedy);
}

double edge_set_distance_lsape(const LabeledGraph& g, const LabeledGraph& h,
                               std::span<const std::size_t> edges_g,
                               std::span<const std::size_t> edges_h, const CostModel& costs,
                               bool greedy) {
  return lsape_set_distance<EdgeSide>(g, h, edges_g, edges_h, costs, greedy);
}

double node_set_distance_multiset(const LabeledGraph& g, const LabeledGraph& h,
                                  std::span<const std::size_t> nodes_g,
                                  std::span<const std::size_t> nodes_h, const CostModel& costs) {
  return multiset_set_distance<NodeSide>(g, h, nodes_g, nodes_h, costs);
}

double edge_set_distance_multiset(const LabeledGraph& g, const LabeledGraph& h,
                                  std::span<const std::size_t> edges_g,
                                  std::span<const std::size_t> edges_h, const CostModel& costs) {
  return multiset_set_distance<EdgeSide>(g, h, edges_g, edges_h, costs);
}

double node_set_distance(SetDistanceKind kind, const LabeledGraph& g, const LabeledGraph& h,
                         std::span<const std::size_t> nodes_g,
                         std::span<const std::size_t> nodes_h, const CostModel& costs) {
  if (kind == SetDistanceKind::kMultiset) return node_set_distance_multiset(g, h, nodes_g, nodes_h, costs);
  return node_set_distance_lsape(g, h, nodes_g, nodes_h, costs, kind == SetDistanceKind::kLsapeGreedy);
}

double edge_set_distance(SetDistanceKind kind, const LabeledGraph& g, const LabeledGraph& h,
                         std::span<const std::size_t> edges_g,
                         std::span<const std::size_t> edges_h, const CostModel& costs) {
  if (kind == SetDistanceKind::kMultiset) return edge_set_distance_multiset(g, h, edges_g, edges_h, costs);
  return edge_set_distance_lsape(g, h, edges_g, edges_h, costs, kind == SetDistanceKind::kLsapeGreedy);
}

LayerTerms layer_terms(const LabeledGraph& g, const LabeledGraph& h, const Layer& layer_g,
                       const Layer& layer_h, SetDistanceKind kind, const CostModel& costs) {
  LayerTerms t;
  t.nodes = normalized(node_set_distance(kind, g, h, layer_g.nodes, layer_h.nodes, costs),
                       layer_g.nodes.size(), layer_h.nodes.size());
  t.inner = normalized(edge_set_distance(kind, g, h, layer_g.inner_edges, layer_h.inner_edges, costs),
                       layer_g.inner_edges.size(), layer_h.inner_edges.size());
  t.outer = normalized(edge_set_distance(kind, g, h, layer_g.outer_edges, layer_h.outer_edges, costs),
                       layer_g.outer_edges.size(), layer_h.outer_edges.size());
  return t;
}

double layer_distance(const LabeledGraph& g, const LabeledGraph& h, const Layer& layer_g,
                      const Layer& layer_h, const AlphaWeights& alpha, SetDistanceKind kind,
                      const CostModel& costs) {
  return layer_terms(g, h, layer_g, layer_h, kind, costs).weighted(alpha);
}

double ring_distance(const LabeledGraph& g, const LabeledGraph& h, const Ring& ring_g,
                     const Ring& ring_h, const AlphaWeights& alpha, const LambdaWeights& lambda,
                     SetDistanceKind kind, const CostModel& costs) {
  if (ring_g.size() != lambda.size() || ring_h.size() != lambda.size()) {
    throw ValidationError("ring sizes do not match the number of level weights");
  }
  double d = 0.0;
  for (std::size_t l = 0; l < lambda.size(); ++l) {
    if (lambda.values[l] == 0.0) continue;
    d += lambda.values[l] * layer_distance(g, h, ring_g.layers[l], ring_h.layers[l], alpha, kind, costs);
  }
  return d;
}

}  // namespace ringged
