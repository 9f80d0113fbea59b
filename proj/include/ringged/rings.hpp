#pragma once

#include <cstddef>
#include <vector>

#include "ringged/graph.hpp"

namespace ringged {

/// One level of a ring: the nodes at BFS distance l from the root, the edges
/// inside that level, and the edges leading to level l+1. All index lists are
/// sorted ascending (edge indices follow the graph's normalized edge order).
struct Layer {
  std::vector<std::size_t> nodes;
  std::vector<std::size_t> outer_edges;
  std::vector<std::size_t> inner_edges;

  bool empty() const { return nodes.empty() && outer_edges.empty() && inner_edges.empty(); }
  friend bool operator==(const Layer&, const Layer&) = default;
};

/// Sequence of exactly L layers rooted at `root` (kEpsilon for the dummy
/// node, whose ring consists of empty layers).
struct Ring {
  std::size_t root = kEpsilon;
  std::vector<Layer> layers;

  std::size_t size() const { return layers.size(); }
  friend bool operator==(const Ring&, const Ring&) = default;
};

/// Breadth-first construction in O(|V| + |E|), independent of `size`.
/// Edges from level size-1 to nodes at distance `size` count as outer edges
/// of the last layer, so a ring of size 1 is the branch (root + incident edges).
Ring build_ring(const LabeledGraph& g, std::size_t root, std::size_t size);

/// The dummy node's ring.
Ring empty_ring(std::size_t size);

struct RingSet {
  std::vector<Ring> rings;  // indexed by root
  Ring dummy;               // ring of the dummy node
  /// Largest non-empty layer index over all roots (the diameter when
  /// size > diameter).
  std::size_t max_level = 0;

  const Ring& at(std::size_t u) const { return u == kEpsilon ? dummy : rings[u]; }
};

RingSet build_all_rings(const LabeledGraph& g, std::size_t size);

/// First `size` layers of every ring; exact because smaller rings are
/// prefixes of larger ones.
RingSet truncate_rings(const RingSet& rings, std::size_t size);

}  // namespace ringged
