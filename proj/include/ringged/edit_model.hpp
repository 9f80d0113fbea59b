#pragma once

#include <span>
#include <utility>

#include "ringged/costs.hpp"
#include "ringged/graph.hpp"
#include "ringged/lsape.hpp"

namespace ringged {

/// A node map between G and H: rows are V^G, columns are V^H.
using NodeMap = Assignment;

/// Cost of the edit path induced by `map`. An edge of G is substituted iff
/// the images of its endpoints are adjacent in H and deleted otherwise; an
/// edge of H whose preimage pair is not an edge of G is inserted.
double induced_edit_cost(const LabeledGraph& g, const LabeledGraph& h, const NodeMap& map,
                         const CostModel& costs);

/// Node and edge parts of induced_edit_cost, in that order.
std::pair<double, double> induced_edit_cost_parts(const LabeledGraph& g, const LabeledGraph& h,
                                                  const NodeMap& map, const CostModel& costs);

struct BoundWithMap {
  double bound = 0.0;
  NodeMap map;
};

/// Minimum induced cost over `solutions` and the first map attaining it.
BoundWithMap upper_bound_from_solutions(const LabeledGraph& g, const LabeledGraph& h,
                                        std::span<const NodeMap> solutions,
                                        const CostModel& costs);

}  // namespace ringged
