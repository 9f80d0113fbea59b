#pragma once

#include <memory>
#include <string>

#include "ringged/graph.hpp"

namespace ringged {

/// Edit cost functions c_V and c_E. Implementations must return
/// non-negative values and 0 for substituting a label by itself.
class CostModel {
 public:
  virtual ~CostModel() = default;

  virtual double node_substitution(const Label& a, const Label& b) const = 0;
  virtual double node_deletion(const Label& a) const = 0;
  virtual double node_insertion(const Label& b) const = 0;
  virtual double edge_substitution(const Label& a, const Label& b) const = 0;
  virtual double edge_deletion(const Label& a) const = 0;
  virtual double edge_insertion(const Label& b) const = 0;

  /// True if c(a,b) == c(b,a) and deletion/insertion costs coincide.
  virtual bool symmetric() const { return false; }
  virtual std::string describe() const = 0;
};

using CostModelPtr = std::shared_ptr<const CostModel>;

/// LETTER costs: 0.75 * Euclidean distance for node substitution, 0.675 for
/// node deletion/insertion, 0.425 for edge deletion/insertion.
CostModelPtr letter_cost_model();

/// Constant costs; substitution of equal labels is free. Throws
/// ValidationError on a negative constant.
CostModelPtr constant_cost_model(double sub_node, double del_node, double ins_node,
                                 double sub_edge, double del_edge, double ins_edge);

/// Parses "letter" or "constant:a,b,c,d,e,f" (node sub/del/ins, edge sub/del/ins).
CostModelPtr parse_cost_model(const std::string& spec);

// Node/edge costs addressed by index, with kEpsilon for the dummy.

inline double node_cost(const CostModel& c, const LabeledGraph& g, std::size_t u,
                        const LabeledGraph& h, std::size_t v) {
  if (u == kEpsilon) return v == kEpsilon ? 0.0 : c.node_insertion(h.node_label(v));
  if (v == kEpsilon) return c.node_deletion(g.node_label(u));
  return c.node_substitution(g.node_label(u), h.node_label(v));
}

inline double edge_cost(const CostModel& c, const LabeledGraph& g, std::size_t e,
                        const LabeledGraph& h, std::size_t f) {
  if (e == kEpsilon) return f == kEpsilon ? 0.0 : c.edge_insertion(h.edge(f).label);
  if (f == kEpsilon) return c.edge_deletion(g.edge(e).label);
  return c.edge_substitution(g.edge(e).label, h.edge(f).label);
}

}  // namespace ringged
