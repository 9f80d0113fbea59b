#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ringged/costs.hpp"
#include "ringged/graph.hpp"
#include "ringged/heuristics.hpp"

namespace ringged {

struct BoundRow {
  std::string g_id;
  std::string h_id;
  double bound = 0.0;
  double seconds = 0.0;
};

/// Bounds for every ordered pair G != H, in (G, H) collection order.
/// Pairs are distributed over config.threads workers; each pair runs single-threaded.
std::vector<BoundRow> compute_bounds(const GraphCollection& collection, const HeuristicConfig& config,
                                     const CostModel& costs,
                                     const OneClassSvmModel* model = nullptr);

/// Mean bound and mean seconds (0, 0 for no rows).
std::pair<double, double> averages(const std::vector<BoundRow>& rows);

/// Header `g_id,h_id,bound,seconds`, one line per row, then `#avg,,b,t`.
void write_bounds_csv(std::ostream& out, const std::vector<BoundRow>& rows);
/// Skips the header and lines starting with '#'. Throws ValidationError on
/// malformed lines.
std::vector<BoundRow> read_bounds_csv(std::istream& in);

/// Leave-one-out 1-NN accuracy with the bound d(G, H) as distance from G;
/// ties go to the lexicographically smallest id. Throws ValidationError on
/// missing class labels or missing pairs.
double knn_accuracy(const GraphCollection& collection, const std::vector<BoundRow>& rows);

}  // namespace ringged
