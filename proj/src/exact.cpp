#include "ringged/exact.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "ringged/error.hpp"

namespace ringged {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

class ExactSearch {
 public:
  ExactSearch(const LabeledGraph& g, const LabeledGraph& h, const CostModel& costs)
      : g_(g), h_(h), costs_(costs),
        image_(g.num_nodes(), kEpsilon), preimage_(h.num_nodes(), kEpsilon),
        decided_(g.num_nodes(), 0) {
    order_ = search_order();
    min_node_del_ = min_node_ins_ = min_edge_del_ = min_edge_ins_ = kInf;
    for (const auto& l : g.node_labels()) min_node_del_ = std::min(min_node_del_, costs.node_deletion(l));
    for (const auto& l : h.node_labels()) min_node_ins_ = std::min(min_node_ins_, costs.node_insertion(l));
    for (const auto& e : g.edges()) min_edge_del_ = std::min(min_edge_del_, costs.edge_deletion(e.label));
    for (const auto& e : h.edges()) min_edge_ins_ = std::min(min_edge_ins_, costs.edge_insertion(e.label));
    open_g_edges_ = g.num_edges();
    open_h_edges_ = h.num_edges();
  }

  BoundWithMap run() {
    recurse(0, 0.0);
    return {best_, NodeMap::from_rows(best_rows_, h_.num_nodes())};
  }

 private:
  // BFS order from high-degree nodes so that edges get decided early.
  std::vector<std::size_t> search_order() const {
    std::vector<std::size_t> by_degree(g_.num_nodes());
    for (std::size_t u = 0; u < by_degree.size(); ++u) by_degree[u] = u;
    std::stable_sort(by_degree.begin(), by_degree.end(),
                     [&](std::size_t a, std::size_t b) { return g_.degree(a) > g_.degree(b); });
    std::vector<char> seen(g_.num_nodes(), 0);
    std::vector<std::size_t> order;
    for (std::size_t start : by_degree) {
      if (seen[start]) continue;
      std::deque<std::size_t> open{start};
      seen[start] = 1;
      while (!open.empty()) {
        const std::size_t u = open.front();
        open.pop_front();
        order.push_back(u);
        for (const auto& inc : g_.incident(u)) {
          if (!seen[inc.neighbor]) {
            seen[inc.neighbor] = 1;
            open.push_back(inc.neighbor);
          }
        }
      }
    }
    return order;
  }

  struct Step {
    double cost;
    std::size_t closed_g;  // G edges decided by this step
    std::size_t closed_h;  // H edges decided by this step
  };

  // Exact cost contribution of mapping u to x given the decisions so far.
  Step step_cost(std::size_t u, std::size_t x) const {
    Step s{node_cost(costs_, g_, u, h_, x), 0, 0};
    for (const auto& inc : g_.incident(u)) {
      if (!decided_[inc.neighbor]) continue;
      ++s.closed_g;
      const std::size_t y = image_[inc.neighbor];
      const auto f = (x != kEpsilon && y != kEpsilon) ? h_.find_edge(x, y) : std::nullopt;
      s.cost += f ? costs_.edge_substitution(g_.edge(inc.edge).label, h_.edge(*f).label)
                  : costs_.edge_deletion(g_.edge(inc.edge).label);
    }
    if (x != kEpsilon) {
      for (const auto& inc : h_.incident(x)) {
        const std::size_t w = preimage_[inc.neighbor];
        if (w == kEpsilon) continue;
        ++s.closed_h;
        if (!g_.has_edge(u, w)) s.cost += costs_.edge_insertion(h_.edge(inc.edge).label);
      }
    }
    return s;
  }

  double remaining_lower_bound(std::size_t depth) const {
    const std::size_t left_g = g_.num_nodes() - depth;
    const std::size_t free_h = h_.num_nodes() - mapped_;
    double lb = 0.0;
    if (left_g > free_h) lb += static_cast<double>(left_g - free_h) * min_node_del_;
    if (free_h > left_g) lb += static_cast<double>(free_h - left_g) * min_node_ins_;
    if (open_g_edges_ > open_h_edges_) lb += static_cast<double>(open_g_edges_ - open_h_edges_) * min_edge_del_;
    if (open_h_edges_ > open_g_edges_) lb += static_cast<double>(open_h_edges_ - open_g_edges_) * min_edge_ins_;
    return lb;
  }

  double leaf_cost() const {
    double c = 0.0;
    for (std::size_t v = 0; v < h_.num_nodes(); ++v) {
      if (preimage_[v] == kEpsilon) c += costs_.node_insertion(h_.node_label(v));
    }
    for (const auto& f : h_.edges()) {
      if (preimage_[f.u] == kEpsilon || preimage_[f.v] == kEpsilon) c += costs_.edge_insertion(f.label);
    }
    return c;
  }

  void recurse(std::size_t depth, double partial) {
    if (depth == order_.size()) {
      const double total = partial + leaf_cost();
      if (total < best_) {
        best_ = total;
        best_rows_ = image_;
      }
      return;
    }
    if (partial + remaining_lower_bound(depth) >= best_) return;
    const std::size_t u = order_[depth];

    std::vector<std::pair<Step, std::size_t>> options;
    options.reserve(h_.num_nodes() + 1);
    for (std::size_t x = 0; x < h_.num_nodes(); ++x) {
      if (preimage_[x] == kEpsilon) options.push_back({step_cost(u, x), x});
    }
    options.push_back({step_cost(u, kEpsilon), kEpsilon});
    std::stable_sort(options.begin(), options.end(),
                     [](const auto& a, const auto& b) { return a.first.cost < b.first.cost; });

    for (const auto& [step, x] : options) {
      if (partial + step.cost >= best_) break;
      image_[u] = x;
      decided_[u] = 1;
      if (x != kEpsilon) {
        preimage_[x] = u;
        ++mapped_;
      }
      open_g_edges_ -= step.closed_g;
      open_h_edges_ -= step.closed_h;
      recurse(depth + 1, partial + step.cost);
      open_g_edges_ += step.closed_g;
      open_h_edges_ += step.closed_h;
      if (x != kEpsilon) {
        preimage_[x] = kEpsilon;
        --mapped_;
      }
      decided_[u] = 0;
      image_[u] = kEpsilon;
    }
  }

  const LabeledGraph& g_;
  const LabeledGraph& h_;
  const CostModel& costs_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> image_;
  std::vector<std::size_t> preimage_;
  std::vector<char> decided_;
  std::size_t mapped_ = 0;
  std::size_t open_g_edges_ = 0;
  std::size_t open_h_edges_ = 0;
  double min_node_del_, min_node_ins_, min_edge_del_, min_edge_ins_;
  double best_ = kInf;
  std::vector<std::size_t> best_rows_;
};

}  // namespace

BoundWithMap exact_ged(const LabeledGraph& g, const LabeledGraph& h, const CostModel& costs,
                       std::size_t node_cap) {
  if (g.num_nodes() + h.num_nodes() > node_cap) {
    throw ValidationError("exact GED limited to " + std::to_string(node_cap) + " nodes in total");
  }
  return ExactSearch(g, h, costs).run();
}

}  // namespace ringged
