#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ringged/graph.hpp"

namespace ringged {

/// Dense (rows+1) x (cols+1) LSAPE cost matrix. The last row holds insertion
/// costs, the last column deletion costs, and the corner is always 0.
class LsapeInstance {
 public:
  LsapeInstance() : LsapeInstance(0, 0) {}
  LsapeInstance(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), costs_((rows + 1) * (cols + 1), 0.0) {}
  /// Row-major costs; throws ValidationError on wrong size, non-finite
  /// entries, or a non-zero corner.
  LsapeInstance(std::size_t rows, std::size_t cols, std::vector<double> costs);
  /// Convenience for tests: a list of rows, each of length cols+1.
  static LsapeInstance from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  /// i in [0, rows] and k in [0, cols]; kEpsilon also addresses the dummy.
  double operator()(std::size_t i, std::size_t k) const { return costs_[index(i, k)]; }
  double& operator()(std::size_t i, std::size_t k) { return costs_[index(i, k)]; }

  std::span<const double> data() const { return costs_; }

 private:
  std::size_t index(std::size_t i, std::size_t k) const {
    if (i == kEpsilon) i = rows_;
    if (k == kEpsilon) k = cols_;
    return i * (cols_ + 1) + k;
  }

  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> costs_;
};

/// Error-correcting assignment. row_to_col[i] is a column or kEpsilon
/// (deletion); col_to_row[k] is a row or kEpsilon (insertion).
struct Assignment {
  std::vector<std::size_t> row_to_col;
  std::vector<std::size_t> col_to_row;

  /// Builds col_to_row from the row decisions. Throws ValidationError if two
  /// rows share a column or a column index is out of range.
  static Assignment from_rows(std::vector<std::size_t> row_to_col, std::size_t cols);

  std::size_t rows() const { return row_to_col.size(); }
  std::size_t cols() const { return col_to_row.size(); }
  bool is_feasible() const;
  Assignment inverse() const { return {col_to_row, row_to_col}; }

  friend bool operator==(const Assignment&, const Assignment&) = default;
};

struct LsapeSolution {
  Assignment assignment;
  double cost = 0.0;
};

/// Sum of the selected substitution, deletion, and insertion cells.
double assignment_cost(const LsapeInstance& instance, const Assignment& assignment);

/// Optimal solution via shortest augmenting paths on the square reduction.
/// Ties are broken towards the lowest column index.
LsapeSolution solve_optimal(const LsapeInstance& instance);

/// Rows in index order take their cheapest free column (the dummy column
/// counts as the last one); leftover columns are inserted.
LsapeSolution solve_greedy(const LsapeInstance& instance);

/// Up to `max_solutions` pairwise distinct optimal solutions; the first one
/// equals solve_optimal's. Returns min(max_solutions, |optimal set|) items.
std::vector<Assignment> enumerate_optimal(const LsapeInstance& instance,
                                          std::size_t max_solutions);

/// Exhaustive minimum, for rows, cols <= kBruteForceLimit.
inline constexpr std::size_t kBruteForceLimit = 7;
double brute_force(const LsapeInstance& instance);

}  // namespace ringged
