#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ringged/dataset_io.hpp"
#include "ringged/error.hpp"
#include "ringged/evaluation.hpp"
#include "ringged/exact.hpp"
#include "ringged/heuristics.hpp"
#include "ringged/ml.hpp"
#include "ringged/param_learning.hpp"
#include "ringged/synthetic.hpp"

namespace py = pybind11;
using namespace ringged;

namespace {

std::vector<std::optional<std::size_t>> map_to_python(const NodeMap& map) {
  std::vector<std::optional<std::size_t>> out;
  for (std::size_t k : map.row_to_col) {
    out.push_back(k == kEpsilon ? std::nullopt : std::optional<std::size_t>(k));
  }
  return out;
}

HeuristicConfig make_config(const std::string& method, std::size_t solutions, std::size_t ring_size,
                            bool greedy_final) {
  HeuristicConfig c;
  c.method = parse_method(method);
  c.num_solutions = solutions;
  c.ring_size = ring_size;
  c.lambda = LambdaWeights::uniform(ring_size);
  c.greedy_final_solve = greedy_final;
  c.validate();
  return c;
}

// pybind11 holders cannot be pointers to const.
std::shared_ptr<CostModel> mutable_ptr(const CostModelPtr& p) { return std::const_pointer_cast<CostModel>(p); }

LsapeInstance instance_from_rows(const std::vector<std::vector<double>>& rows) {
  return LsapeInstance::from_rows(rows);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "ring-based graph edit distance upper bounds";
  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);

  py::class_<LabeledGraph>(m, "Graph")
      .def_property_readonly("id", &LabeledGraph::id)
      .def_property_readonly("class_label", &LabeledGraph::class_label)
      .def_property_readonly("num_nodes", &LabeledGraph::num_nodes)
      .def_property_readonly("num_edges", &LabeledGraph::num_edges)
      .def("__repr__", [](const LabeledGraph& g) {
        return "<Graph " + g.id() + " |V|=" + std::to_string(g.num_nodes()) +
               " |E|=" + std::to_string(g.num_edges()) + ">";
      });

  py::class_<GraphCollection>(m, "Collection")
      .def_readonly("graphs", &GraphCollection::graphs)
      .def("__len__", [](const GraphCollection& c) { return c.graphs.size(); })
      .def("__getitem__", [](const GraphCollection& c, std::size_t i) {
        if (i >= c.graphs.size()) throw py::index_error();
        return c.graphs[i];
      })
      .def("to_json", &serialize_collection);

  py::class_<CostModel, std::shared_ptr<CostModel>>(m, "CostModel");
  m.def("parse_cost_model", [](const std::string& spec) { return mutable_ptr(parse_cost_model(spec)); },
        py::arg("spec"));
  m.def("letter_cost_model", [] { return mutable_ptr(letter_cost_model()); });
  m.def(
      "constant_cost_model",
      [](double sn, double dn, double in, double se, double de, double ie) {
        return mutable_ptr(constant_cost_model(sn, dn, in, se, de, ie));
      },
      py::arg("sub_node"), py::arg("del_node"), py::arg("ins_node"), py::arg("sub_edge"), py::arg("del_edge"),
      py::arg("ins_edge"));

  py::class_<OneClassSvmModel>(m, "SvmModel")
      .def_static("load", [](const std::string& p) { return OneClassSvmModel::load(p); })
      .def_static("from_json", &OneClassSvmModel::from_json)
      .def("to_json", &OneClassSvmModel::to_json);

  m.def("load_collection", [](const std::string& p) { return load_collection(p); }, py::arg("path"));
  m.def("parse_collection", &parse_collection, py::arg("text"));
  m.def(
      "generate_trees",
      [](std::size_t min_size, std::size_t max_size, std::size_t alphabet, std::size_t count,
         std::uint64_t seed) {
        TreeDatasetSpec spec;
        spec.min_size = min_size;
        spec.max_size = max_size;
        spec.alphabet = alphabet;
        spec.count = count;
        spec.seed = seed;
        return generate_trees(spec);
      },
      py::arg("min_size") = 8, py::arg("max_size") = 12, py::arg("alphabet") = 1, py::arg("count") = 50,
      py::arg("seed") = 0);

  m.def(
      "upper_bound",
      [](const LabeledGraph& g, const LabeledGraph& h, const CostModel& costs, const std::string& method,
         std::size_t solutions, std::size_t ring_size, bool greedy_final, const OneClassSvmModel* model) {
        const auto r = upper_bound(g, h, make_config(method, solutions, ring_size, greedy_final), costs, model);
        return py::make_tuple(r.bound, map_to_python(r.map));
      },
      py::arg("g"), py::arg("h"), py::arg("costs"), py::arg("method") = "ring_opt", py::arg("solutions") = 1,
      py::arg("ring_size") = 3, py::arg("greedy_final") = false, py::arg("model") = nullptr);

  m.def(
      "exact_ged",
      [](const LabeledGraph& g, const LabeledGraph& h, const CostModel& costs, std::size_t node_cap) {
        const auto r = exact_ged(g, h, costs, node_cap);
        return py::make_tuple(r.bound, map_to_python(r.map));
      },
      py::arg("g"), py::arg("h"), py::arg("costs"), py::arg("node_cap") = kDefaultExactNodeCap);

  m.def(
      "compute_bounds",
      [](const GraphCollection& c, const CostModel& costs, const std::string& method, std::size_t solutions,
         std::size_t ring_size, const OneClassSvmModel* model) {
        std::vector<std::tuple<std::string, std::string, double, double>> out;
        for (const auto& r : compute_bounds(c, make_config(method, solutions, ring_size, false), costs, model)) {
          out.emplace_back(r.g_id, r.h_id, r.bound, r.seconds);
        }
        return out;
      },
      py::arg("collection"), py::arg("costs"), py::arg("method") = "ring_opt", py::arg("solutions") = 1,
      py::arg("ring_size") = 3, py::arg("model") = nullptr);

  m.def(
      "solve_lsape",
      [](const std::vector<std::vector<double>>& rows, bool greedy) {
        const auto c = instance_from_rows(rows);
        const auto s = greedy ? solve_greedy(c) : solve_optimal(c);
        std::vector<std::optional<std::size_t>> cols;
        for (std::size_t k : s.assignment.row_to_col) {
          cols.push_back(k == kEpsilon ? std::nullopt : std::optional<std::size_t>(k));
        }
        return py::make_tuple(s.cost, cols);
      },
      py::arg("rows"), py::arg("greedy") = false);
}
