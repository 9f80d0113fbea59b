#include "ringged/synthetic.hpp"

#include <algorithm>
#include <queue>
#include <random>
#include <set>

#include "ringged/error.hpp"

namespace ringged {
namespace {

std::string encode(const LabeledGraph& t, std::size_t u, std::size_t parent) {
  std::vector<std::string> children;
  for (const auto& inc : t.incident(u)) {
    if (inc.neighbor != parent) children.push_back(encode(t, inc.neighbor, u));
  }
  std::sort(children.begin(), children.end());
  std::string s = "(";
  for (const auto& c : children) s += c;
  return s + ")";
}

std::vector<std::size_t> centers(const LabeledGraph& t) {
  const std::size_t n = t.num_nodes();
  std::vector<std::size_t> degree(n);
  std::vector<std::size_t> leaves;
  for (std::size_t u = 0; u < n; ++u) {
    degree[u] = t.degree(u);
    if (degree[u] <= 1) leaves.push_back(u);
  }
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= leaves.size();
    std::vector<std::size_t> next;
    for (std::size_t leaf : leaves) {
      for (const auto& inc : t.incident(leaf)) {
        if (--degree[inc.neighbor] == 1) next.push_back(inc.neighbor);
      }
    }
    leaves = std::move(next);
  }
  return leaves;
}

std::vector<Edge> pruefer_decode(const std::vector<std::size_t>& seq, std::size_t n) {
  std::vector<std::size_t> degree(n, 1);
  for (std::size_t x : seq) ++degree[x];
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> leaves;
  for (std::size_t u = 0; u < n; ++u) {
    if (degree[u] == 1) leaves.push(u);
  }
  std::vector<Edge> edges;
  for (std::size_t x : seq) {
    const std::size_t leaf = leaves.top();
    leaves.pop();
    edges.push_back({leaf, x, Label(std::string("1"))});
    if (--degree[x] == 1) leaves.push(x);
  }
  const std::size_t a = leaves.top();
  leaves.pop();
  const std::size_t b = leaves.top();
  edges.push_back({a, b, Label(std::string("1"))});
  return edges;
}

}  // namespace

std::string canonical_tree_form(const LabeledGraph& tree) {
  const std::size_t n = tree.num_nodes();
  if (n == 0) return "";
  if (tree.num_edges() + 1 != n) throw ValidationError("graph '" + tree.id() + "' is not a tree");
  for (std::size_t d : bfs_distances(tree, 0)) {
    if (d == kEpsilon) throw ValidationError("graph '" + tree.id() + "' is not connected");
  }
  std::string best;
  for (std::size_t c : centers(tree)) {
    std::string s = encode(tree, c, kEpsilon);
    if (best.empty() || s < best) best = std::move(s);
  }
  return best;
}

GraphCollection generate_trees(const TreeDatasetSpec& spec) {
  if (spec.count < 1) throw ValidationError("tree count must be at least 1");
  if (spec.alphabet < 1) throw ValidationError("label alphabet size must be at least 1");
  if (spec.min_size < 1 || spec.min_size > spec.max_size) {
    throw ValidationError("tree size range must satisfy 1 <= min <= max");
  }
  std::mt19937_64 rng(spec.seed);
  std::uniform_int_distribution<std::size_t> size_dist(spec.min_size, spec.max_size);
  std::uniform_int_distribution<std::size_t> label_dist(1, spec.alphabet);

  GraphCollection out;
  out.node_label_kind = LabelKind::kSymbol;
  out.edge_label_kind = LabelKind::kSymbol;
  std::set<std::string> seen;
  for (std::size_t attempt = 0; attempt < spec.max_attempts && out.graphs.size() < spec.count;
       ++attempt) {
    const std::size_t n = size_dist(rng);
    std::vector<Edge> edges;
    if (n == 2) {
      edges.push_back({0, 1, Label(std::string("1"))});
    } else if (n > 2) {
      std::uniform_int_distribution<std::size_t> node_dist(0, n - 1);
      std::vector<std::size_t> seq(n - 2);
      for (auto& x : seq) x = node_dist(rng);
      edges = pruefer_decode(seq, n);
    }
    std::vector<Label> labels(n, Label(std::string("1")));
    LabeledGraph shape("", labels, edges);
    if (!seen.insert(canonical_tree_form(shape)).second) continue;
    for (auto& l : labels) l = Label(std::to_string(label_dist(rng)));
    out.graphs.emplace_back("t" + std::to_string(out.graphs.size() + 1), std::move(labels),
                            std::move(edges));
  }
  if (out.graphs.size() < spec.count) {
    throw ValidationError("could only generate " + std::to_string(out.graphs.size()) +
                          " pairwise non-isomorphic trees of sizes " +
                          std::to_string(spec.min_size) + ".." + std::to_string(spec.max_size) +
                          " (requested " + std::to_string(spec.count) + ")");
  }
  return out;
}

}  // namespace ringged
