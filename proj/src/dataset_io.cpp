#include "ringged/dataset_io.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "ringged/error.hpp"

namespace ringged {
namespace {

using nlohmann::json;

LabelKind parse_kind(const json& doc, const char* key) {
  if (!doc.contains(key)) throw ValidationError(std::string("missing '") + key + "'");
  const auto value = doc.at(key).get<std::string>();
  if (value == "symbol") return LabelKind::kSymbol;
  if (value == "vector") return LabelKind::kVector;
  throw ValidationError(std::string("'") + key + "' must be 'symbol' or 'vector'");
}

const char* kind_name(LabelKind kind) { return kind == LabelKind::kSymbol ? "symbol" : "vector"; }

// Tracks the vector dimension seen so far for one label role in the collection.
Label parse_label(const json& value, LabelKind kind, std::optional<std::size_t>& dim,
                  const std::string& where) {
  if (kind == LabelKind::kSymbol) {
    if (value.is_string()) return Label(value.get<std::string>());
    if (value.is_number_integer()) return Label(std::to_string(value.get<long long>()));
    throw ValidationError(where + ": expected a symbol label");
  }
  if (!value.is_array()) throw ValidationError(where + ": expected a vector label");
  std::vector<double> vec;
  for (const auto& x : value) {
    if (!x.is_number()) throw ValidationError(where + ": vector label entries must be numbers");
    vec.push_back(x.get<double>());
  }
  if (!dim) dim = vec.size();
  if (*dim != vec.size()) {
    throw ValidationError(where + ": label dimension " + std::to_string(vec.size()) +
                          " differs from collection dimension " + std::to_string(*dim));
  }
  return Label(std::move(vec));
}

json label_to_json(const Label& label) {
  if (label.is_symbol()) return label.symbol();
  return label.vec();
}

}  // namespace

GraphCollection parse_collection(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("dataset parse error: ") + e.what());
  }
  GraphCollection out;
  try {
    out.node_label_kind = parse_kind(doc, "node_label_kind");
    out.edge_label_kind = parse_kind(doc, "edge_label_kind");
    if (!doc.contains("graphs") || !doc.at("graphs").is_array()) {
      throw ValidationError("missing 'graphs' array");
    }
    std::optional<std::size_t> node_dim, edge_dim;
    for (std::size_t gi = 0; gi < doc.at("graphs").size(); ++gi) {
      const json& jg = doc.at("graphs")[gi];
      const std::string id =
          jg.contains("id") ? jg.at("id").get<std::string>() : "#" + std::to_string(gi + 1);
      std::optional<std::string> cls;
      if (jg.contains("class") && !jg.at("class").is_null()) cls = jg.at("class").get<std::string>();

      std::vector<Label> nodes;
      const json& jnodes = jg.value("nodes", json::array());
      for (std::size_t i = 0; i < jnodes.size(); ++i) {
        nodes.push_back(parse_label(jnodes[i], out.node_label_kind, node_dim,
                                    "graph '" + id + "' node " + std::to_string(i + 1)));
      }
      std::vector<Edge> edges;
      const json& jedges = jg.value("edges", json::array());
      for (std::size_t k = 0; k < jedges.size(); ++k) {
        const json& je = jedges[k];
        const std::string where = "graph '" + id + "' edge " + std::to_string(k + 1);
        if (!je.is_array() || je.size() < 2 || je.size() > 3 || !je[0].is_number_integer() ||
            !je[1].is_number_integer()) {
          throw ValidationError(where + ": expected [i, j, label]");
        }
        const auto i = je[0].get<long long>();
        const auto j = je[1].get<long long>();
        if (i < 1 || j < 1 || i > static_cast<long long>(nodes.size()) ||
            j > static_cast<long long>(nodes.size())) {
          throw ValidationError(where + ": endpoint out of range");
        }
        // Unlabeled edges default to the symbol "1".
        Label label = je.size() == 3 ? parse_label(je[2], out.edge_label_kind, edge_dim, where)
                      : out.edge_label_kind == LabelKind::kSymbol
                          ? Label(std::string("1"))
                          : throw ValidationError(where + ": vector edge label missing");
        edges.push_back({static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1),
                         std::move(label)});
      }
      out.graphs.emplace_back(id, std::move(nodes), std::move(edges), std::move(cls));
    }
  } catch (const json::exception& e) {
    throw ValidationError(std::string("dataset schema error: ") + e.what());
  }
  return out;
}

GraphCollection load_collection(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open dataset '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_collection(buffer.str());
}

std::string serialize_collection(const GraphCollection& collection) {
  json doc;
  doc["node_label_kind"] = kind_name(collection.node_label_kind);
  doc["edge_label_kind"] = kind_name(collection.edge_label_kind);
  doc["graphs"] = json::array();
  for (const auto& g : collection.graphs) {
    json jg;
    jg["id"] = g.id();
    if (g.class_label()) jg["class"] = *g.class_label();
    jg["nodes"] = json::array();
    for (const auto& label : g.node_labels()) jg["nodes"].push_back(label_to_json(label));
    jg["edges"] = json::array();
    for (const auto& e : g.edges()) {
      jg["edges"].push_back(json::array({e.u + 1, e.v + 1, label_to_json(e.label)}));
    }
    doc["graphs"].push_back(std::move(jg));
  }
  return doc.dump(1);
}

void save_collection(const GraphCollection& collection, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write '" + path.string() + "'");
  out << serialize_collection(collection) << '\n';
}

}  // namespace ringged
