#include "ringged/evaluation.hpp"

#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "ringged/error.hpp"
#include "ringged/parallel.hpp"

namespace ringged {
namespace {

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

double parse_double(const std::string& s, std::size_t line) {
  try {
    std::size_t pos = 0;
    const double x = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return x;
  } catch (const std::exception&) {
    throw ValidationError("CSV line " + std::to_string(line) + ": '" + s + "' is not a number");
  }
}

}  // namespace

std::vector<BoundRow> compute_bounds(const GraphCollection& collection, const HeuristicConfig& config,
                                     const CostModel& costs, const OneClassSvmModel* model) {
  config.validate();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < collection.graphs.size(); ++i) {
    for (std::size_t j = 0; j < collection.graphs.size(); ++j) {
      if (i != j) pairs.emplace_back(i, j);
    }
  }
  HeuristicConfig single = config;
  single.threads = 1;
  std::vector<BoundRow> rows(pairs.size());
  parallel_for(pairs.size(), config.threads, [&](std::size_t p) {
    const LabeledGraph& g = collection.graphs[pairs[p].first];
    const LabeledGraph& h = collection.graphs[pairs[p].second];
    const UpperBoundResult r = upper_bound(g, h, single, costs, model);
    rows[p] = {g.id(), h.id(), r.bound, r.seconds};
  });
  return rows;
}

std::pair<double, double> averages(const std::vector<BoundRow>& rows) {
  if (rows.empty()) return {0.0, 0.0};
  double b = 0.0, t = 0.0;
  for (const auto& r : rows) {
    b += r.bound;
    t += r.seconds;
  }
  const double n = static_cast<double>(rows.size());
  return {b / n, t / n};
}

void write_bounds_csv(std::ostream& out, const std::vector<BoundRow>& rows) {
  out << "g_id,h_id,bound,seconds\n";
  for (const auto& r : rows) {
    out << r.g_id << ',' << r.h_id << ',' << format_double(r.bound) << ',' << format_double(r.seconds)
        << '\n';
  }
  const auto [b, t] = averages(rows);
  out << "#avg,," << format_double(b) << ',' << format_double(t) << '\n';
}

std::vector<BoundRow> read_bounds_csv(std::istream& in) {
  std::vector<BoundRow> rows;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    if (line.rfind("g_id,", 0) == 0) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (fields.size() != 4) {
      throw ValidationError("CSV line " + std::to_string(number) + ": expected 4 fields");
    }
    rows.push_back({fields[0], fields[1], parse_double(fields[2], number), parse_double(fields[3], number)});
  }
  return rows;
}

double knn_accuracy(const GraphCollection& collection, const std::vector<BoundRow>& rows) {
  if (!collection.has_class_labels()) throw ValidationError("dataset has no class labels");
  if (collection.graphs.size() < 2) throw ValidationError("1-NN needs at least two graphs");
  std::map<std::pair<std::string, std::string>, double> dist;
  for (const auto& r : rows) dist[{r.g_id, r.h_id}] = r.bound;
  std::size_t correct = 0;
  for (const auto& g : collection.graphs) {
    const LabeledGraph* nearest = nullptr;
    double best = 0.0;
    for (const auto& h : collection.graphs) {
      if (&h == &g) continue;
      const auto it = dist.find({g.id(), h.id()});
      if (it == dist.end()) {
        throw ValidationError("CSV lacks the pair (" + g.id() + ", " + h.id() + ")");
      }
      if (nearest == nullptr || it->second < best ||
          (it->second == best && h.id() < nearest->id())) {
        nearest = &h;
        best = it->second;
      }
    }
    if (nearest->class_label() == g.class_label()) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(collection.graphs.size());
}

}  // namespace ringged
