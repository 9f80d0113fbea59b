#include "ringged/costs.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "ringged/error.hpp"

namespace ringged {
namespace {

double euclidean(const Label& a, const Label& b) {
  if (a.is_symbol() || b.is_symbol() || a.dimension() != b.dimension()) {
    throw ValidationError("LETTER costs need real-vector node labels of equal dimension");
  }
  double sq = 0.0;
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    const double d = a.vec()[i] - b.vec()[i];
    sq += d * d;
  }
  return std::sqrt(sq);
}

class LetterCostModel final : public CostModel {
 public:
  double node_substitution(const Label& a, const Label& b) const override {
    return 0.75 * euclidean(a, b);
  }
  double node_deletion(const Label&) const override { return 0.675; }
  double node_insertion(const Label&) const override { return 0.675; }
  // Edges carry one symbol; differing symbols cost a deletion plus an insertion.
  double edge_substitution(const Label& a, const Label& b) const override {
    return a == b ? 0.0 : 0.85;
  }
  double edge_deletion(const Label&) const override { return 0.425; }
  double edge_insertion(const Label&) const override { return 0.425; }
  bool symmetric() const override { return true; }
  std::string describe() const override { return "letter"; }
};

class ConstantCostModel final : public CostModel {
 public:
  ConstantCostModel(double sn, double dn, double in, double se, double de, double ie)
      : sub_node_(sn), del_node_(dn), ins_node_(in), sub_edge_(se), del_edge_(de), ins_edge_(ie) {}

  double node_substitution(const Label& a, const Label& b) const override {
    return a == b ? 0.0 : sub_node_;
  }
  double node_deletion(const Label&) const override { return del_node_; }
  double node_insertion(const Label&) const override { return ins_node_; }
  double edge_substitution(const Label& a, const Label& b) const override {
    return a == b ? 0.0 : sub_edge_;
  }
  double edge_deletion(const Label&) const override { return del_edge_; }
  double edge_insertion(const Label&) const override { return ins_edge_; }
  bool symmetric() const override { return del_node_ == ins_node_ && del_edge_ == ins_edge_; }
  std::string describe() const override {
    std::ostringstream out;
    out << "constant:" << sub_node_ << ',' << del_node_ << ',' << ins_node_ << ',' << sub_edge_
        << ',' << del_edge_ << ',' << ins_edge_;
    return out.str();
  }

 private:
  double sub_node_, del_node_, ins_node_, sub_edge_, del_edge_, ins_edge_;
};

}  // namespace

CostModelPtr letter_cost_model() { return std::make_shared<LetterCostModel>(); }

CostModelPtr constant_cost_model(double sub_node, double del_node, double ins_node,
                                 double sub_edge, double del_edge, double ins_edge) {
  for (double c : {sub_node, del_node, ins_node, sub_edge, del_edge, ins_edge}) {
    if (!(c >= 0.0) || !std::isfinite(c)) {
      throw ValidationError("constant edit costs must be finite and non-negative");
    }
  }
  return std::make_shared<ConstantCostModel>(sub_node, del_node, ins_node, sub_edge, del_edge,
                                             ins_edge);
}

CostModelPtr parse_cost_model(const std::string& spec) {
  if (spec == "letter") return letter_cost_model();
  const std::string prefix = "constant:";
  if (spec.rfind(prefix, 0) == 0) {
    std::vector<double> values;
    std::istringstream in(spec.substr(prefix.size()));
    std::string item;
    while (std::getline(in, item, ',')) {
      try {
        std::size_t used = 0;
        values.push_back(std::stod(item, &used));
        if (used != item.size()) throw std::invalid_argument(item);
      } catch (const std::exception&) {
        throw ValidationError("bad cost constant '" + item + "'");
      }
    }
    if (values.size() != 6) throw ValidationError("constant costs need six values");
    return constant_cost_model(values[0], values[1], values[2], values[3], values[4], values[5]);
  }
  throw ValidationError("unknown cost model '" + spec + "'");
}

}  // namespace ringged
