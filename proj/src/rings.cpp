#include "ringged/rings.hpp"

#include <algorithm>
#include <deque>

#include "ringged/error.hpp"

namespace ringged {

Ring empty_ring(std::size_t size) { return Ring{kEpsilon, std::vector<Layer>(size)}; }

Ring build_ring(const LabeledGraph& g, std::size_t root, std::size_t size) {
  if (size < 1) throw ValidationError("ring size must be at least 1");
  if (root == kEpsilon) return empty_ring(size);
  if (root >= g.num_nodes()) {
    throw ValidationError("graph '" + g.id() + "': ring root " + std::to_string(root + 1) +
                          " out of range");
  }
  Ring ring = empty_ring(size);
  ring.root = root;

  std::vector<std::size_t> dist(g.num_nodes(), kEpsilon);
  std::vector<char> discovered(g.num_edges(), 0);
  std::deque<std::size_t> open{root};
  dist[root] = 0;
  while (!open.empty()) {
    const std::size_t u = open.front();
    open.pop_front();
    Layer& layer = ring.layers[dist[u]];
    layer.nodes.push_back(u);
    for (const auto& inc : g.incident(u)) {
      if (discovered[inc.edge]) continue;
      discovered[inc.edge] = 1;
      const std::size_t w = inc.neighbor;
      if (dist[w] == kEpsilon) {
        dist[w] = dist[u] + 1;
        if (dist[w] < size) open.push_back(w);
      }
      if (dist[w] == dist[u]) {
        layer.inner_edges.push_back(inc.edge);
      } else {
        layer.outer_edges.push_back(inc.edge);
      }
    }
  }
  for (auto& layer : ring.layers) {
    std::sort(layer.nodes.begin(), layer.nodes.end());
    std::sort(layer.outer_edges.begin(), layer.outer_edges.end());
    std::sort(layer.inner_edges.begin(), layer.inner_edges.end());
  }
  return ring;
}

RingSet build_all_rings(const LabeledGraph& g, std::size_t size) {
  RingSet out;
  out.dummy = empty_ring(size);
  out.rings.reserve(g.num_nodes());
  for (std::size_t u = 0; u < g.num_nodes(); ++u) {
    out.rings.push_back(build_ring(g, u, size));
    for (std::size_t l = 0; l < size; ++l) {
      if (!out.rings.back().layers[l].nodes.empty()) out.max_level = std::max(out.max_level, l);
    }
  }
  return out;
}

RingSet truncate_rings(const RingSet& rings, std::size_t size) {
  if (size < 1) throw ValidationError("ring size must be at least 1");
  RingSet out;
  out.dummy = empty_ring(size);
  for (const Ring& r : rings.rings) {
    if (r.size() < size) throw ValidationError("cannot extend rings by truncation");
    Ring t{r.root, {r.layers.begin(), r.layers.begin() + static_cast<std::ptrdiff_t>(size)}};
    for (std::size_t l = 0; l < size; ++l) {
      if (!t.layers[l].nodes.empty()) out.max_level = std::max(out.max_level, l);
    }
    out.rings.push_back(std::move(t));
  }
  return out;
}

}  // namespace ringged
