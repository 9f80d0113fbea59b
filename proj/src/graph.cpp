#include "ringged/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "ringged/error.hpp"

namespace ringged {

std::string to_string(const Label& label) {
  if (label.is_symbol()) return label.symbol();
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < label.vec().size(); ++i) {
    if (i) out << ',';
    out << label.vec()[i];
  }
  out << ')';
  return out.str();
}

LabeledGraph::LabeledGraph(std::string id, std::vector<Label> node_labels,
                           std::vector<Edge> edges, std::optional<std::string> class_label)
    : id_(std::move(id)),
      class_label_(std::move(class_label)),
      node_labels_(std::move(node_labels)),
      edges_(std::move(edges)) {
  const std::size_t n = node_labels_.size();
  for (auto& e : edges_) {
    if (e.u >= n || e.v >= n) {
      throw ValidationError("graph '" + id_ + "': edge endpoint out of range (" +
                            std::to_string(e.u + 1) + "," + std::to_string(e.v + 1) + ")");
    }
    if (e.u == e.v) {
      throw ValidationError("graph '" + id_ + "': self-loop at node " + std::to_string(e.u + 1));
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.u, a.v) < std::tie(b.u, b.v);
  });
  for (std::size_t i = 1; i < edges_.size(); ++i) {
    if (edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v) {
      throw ValidationError("graph '" + id_ + "': duplicate edge (" +
                            std::to_string(edges_[i].u + 1) + "," +
                            std::to_string(edges_[i].v + 1) + ")");
    }
  }
  adjacency_.assign(n, {});
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    adjacency_[edges_[e].u].push_back({edges_[e].v, e});
    adjacency_[edges_[e].v].push_back({edges_[e].u, e});
  }
}

std::optional<std::size_t> LabeledGraph::find_edge(std::size_t u, std::size_t v) const {
  if (u >= num_nodes() || v >= num_nodes()) return std::nullopt;
  const auto& shorter = adjacency_[u].size() <= adjacency_[v].size() ? adjacency_[u] : adjacency_[v];
  const std::size_t other = adjacency_[u].size() <= adjacency_[v].size() ? v : u;
  for (const auto& inc : shorter) {
    if (inc.neighbor == other) return inc.edge;
  }
  return std::nullopt;
}

std::vector<std::size_t> bfs_distances(const LabeledGraph& g, std::size_t source) {
  std::vector<std::size_t> dist(g.num_nodes(), kEpsilon);
  std::deque<std::size_t> open{source};
  dist[source] = 0;
  while (!open.empty()) {
    const std::size_t u = open.front();
    open.pop_front();
    for (const auto& inc : g.incident(u)) {
      if (dist[inc.neighbor] == kEpsilon) {
        dist[inc.neighbor] = dist[u] + 1;
        open.push_back(inc.neighbor);
      }
    }
  }
  return dist;
}

std::size_t diameter(const LabeledGraph& g) {
  std::size_t diam = 0;
  for (std::size_t u = 0; u < g.num_nodes(); ++u) {
    for (std::size_t d : bfs_distances(g, u)) {
      if (d != kEpsilon) diam = std::max(diam, d);
    }
  }
  return diam;
}

bool GraphCollection::has_class_labels() const {
  return std::all_of(graphs.begin(), graphs.end(),
                     [](const LabeledGraph& g) { return g.class_label().has_value(); });
}

}  // namespace ringged
