#include "ringged/edit_model.hpp"

#include "ringged/error.hpp"

namespace ringged {

std::pair<double, double> induced_edit_cost_parts(const LabeledGraph& g, const LabeledGraph& h,
                                                  const NodeMap& map, const CostModel& costs) {
  if (map.rows() != g.num_nodes() || map.cols() != h.num_nodes() || !map.is_feasible()) {
    throw ValidationError("node map does not match graphs '" + g.id() + "' and '" + h.id() + "'");
  }
  double node_part = 0.0;
  for (std::size_t u = 0; u < g.num_nodes(); ++u) {
    node_part += node_cost(costs, g, u, h, map.row_to_col[u]);
  }
  for (std::size_t v = 0; v < h.num_nodes(); ++v) {
    if (map.col_to_row[v] == kEpsilon) node_part += costs.node_insertion(h.node_label(v));
  }

  double edge_part = 0.0;
  for (const auto& e : g.edges()) {
    const std::size_t a = map.row_to_col[e.u];
    const std::size_t b = map.row_to_col[e.v];
    const auto f = (a != kEpsilon && b != kEpsilon) ? h.find_edge(a, b) : std::nullopt;
    edge_part += f ? costs.edge_substitution(e.label, h.edge(*f).label)
                   : costs.edge_deletion(e.label);
  }
  for (const auto& f : h.edges()) {
    const std::size_t a = map.col_to_row[f.u];
    const std::size_t b = map.col_to_row[f.v];
    if (a == kEpsilon || b == kEpsilon || !g.has_edge(a, b)) {
      edge_part += costs.edge_insertion(f.label);
    }
  }
  return {node_part, edge_part};
}

double induced_edit_cost(const LabeledGraph& g, const LabeledGraph& h, const NodeMap& map,
                         const CostModel& costs) {
  const auto [nodes, edges] = induced_edit_cost_parts(g, h, map, costs);
  return nodes + edges;
}

BoundWithMap upper_bound_from_solutions(const LabeledGraph& g, const LabeledGraph& h,
                                        std::span<const NodeMap> solutions,
                                        const CostModel& costs) {
  if (solutions.empty()) throw ValidationError("upper bound needs at least one node map");
  BoundWithMap best{induced_edit_cost(g, h, solutions.front(), costs), solutions.front()};
  for (std::size_t i = 1; i < solutions.size(); ++i) {
    const double c = induced_edit_cost(g, h, solutions[i], costs);
    if (c < best.bound) best = {c, solutions[i]};
  }
  return best;
}

}  // namespace ringged
