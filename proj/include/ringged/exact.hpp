#pragma once

#include "ringged/costs.hpp"
#include "ringged/edit_model.hpp"

namespace ringged {

inline constexpr std::size_t kDefaultExactNodeCap = 12;

/// Exact GED by exhaustive search over node maps with a running lower bound.
/// Throws ValidationError if |V^G| + |V^H| exceeds `node_cap`.
BoundWithMap exact_ged(const LabeledGraph& g, const LabeledGraph& h, const CostModel& costs,
                       std::size_t node_cap = kDefaultExactNodeCap);

}  // namespace ringged
