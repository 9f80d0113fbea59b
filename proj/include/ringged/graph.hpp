#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace ringged {

/// Index used for the dummy node / dummy row / dummy column.
inline constexpr std::size_t kEpsilon = std::numeric_limits<std::size_t>::max();

enum class LabelKind { kSymbol, kVector };

/// A node or edge label: either a symbol or a real vector.
/// Equality and ordering are exact (lexicographic on vectors).
class Label {
 public:
  Label() = default;
  explicit Label(std::string symbol) : value_(std::move(symbol)) {}
  explicit Label(std::vector<double> vec) : value_(std::move(vec)) {}

  LabelKind kind() const {
    return std::holds_alternative<std::string>(value_) ? LabelKind::kSymbol
                                                       : LabelKind::kVector;
  }
  bool is_symbol() const { return kind() == LabelKind::kSymbol; }
  const std::string& symbol() const { return std::get<std::string>(value_); }
  const std::vector<double>& vec() const { return std::get<std::vector<double>>(value_); }
  /// 0 for symbols.
  std::size_t dimension() const { return is_symbol() ? 0 : vec().size(); }

  friend bool operator==(const Label&, const Label&) = default;
  friend auto operator<=>(const Label& a, const Label& b) { return a.value_ <=> b.value_; }

 private:
  std::variant<std::string, std::vector<double>> value_{std::string{}};
};

std::string to_string(const Label& label);

struct Edge {
  std::size_t u;  // u < v
  std::size_t v;
  Label label;
};

/// Undirected labeled graph without self-loops or multi-edges.
///
/// Nodes are indexed 0..n-1. Edges are kept sorted by their normalized
/// endpoint pair, so edge indices are deterministic for a given edge set.
class LabeledGraph {
 public:
  struct Incidence {
    std::size_t neighbor;
    std::size_t edge;
  };

  LabeledGraph() = default;
  /// Throws ValidationError on self-loops, duplicate edges, or bad endpoints.
  LabeledGraph(std::string id, std::vector<Label> node_labels, std::vector<Edge> edges,
               std::optional<std::string> class_label = std::nullopt);

  const std::string& id() const { return id_; }
  const std::optional<std::string>& class_label() const { return class_label_; }

  std::size_t num_nodes() const { return node_labels_.size(); }
  std::size_t num_edges() const { return edges_.size(); }

  const Label& node_label(std::size_t u) const { return node_labels_[u]; }
  const std::vector<Label>& node_labels() const { return node_labels_; }
  const Edge& edge(std::size_t e) const { return edges_[e]; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const Incidence> incident(std::size_t u) const { return adjacency_[u]; }
  std::size_t degree(std::size_t u) const { return adjacency_[u].size(); }

  /// Index of the edge between u and v, if any.
  std::optional<std::size_t> find_edge(std::size_t u, std::size_t v) const;
  bool has_edge(std::size_t u, std::size_t v) const { return find_edge(u, v).has_value(); }

 private:
  std::string id_;
  std::optional<std::string> class_label_;
  std::vector<Label> node_labels_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
};

/// BFS distances from `source`; unreachable nodes get kEpsilon.
std::vector<std::size_t> bfs_distances(const LabeledGraph& g, std::size_t source);

/// Largest finite eccentricity (diameter of the largest component sense).
std::size_t diameter(const LabeledGraph& g);

struct GraphCollection {
  LabelKind node_label_kind = LabelKind::kSymbol;
  LabelKind edge_label_kind = LabelKind::kSymbol;
  std::vector<LabeledGraph> graphs;

  bool has_class_labels() const;
};

}  // namespace ringged
