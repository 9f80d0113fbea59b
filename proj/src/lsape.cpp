#include "ringged/lsape.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <utility>

#include "ringged/error.hpp"

namespace ringged {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Square assignment (Hungarian with potentials, O(N^3)). Entries may be +inf
// for forbidden cells; returns nullopt when no finite perfect matching exists.
std::optional<std::vector<std::size_t>> solve_square(const std::vector<double>& a, std::size_t n) {
  std::vector<std::size_t> row_match(n);
  if (n == 0) return row_match;
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0), minv(n + 1);
  std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
  std::vector<char> used(n + 1);
  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::fill(minv.begin(), minv.end(), kInf);
    std::fill(used.begin(), used.end(), 0);
    do {
      used[j0] = 1;
      const std::size_t i0 = p[j0];
      double delta = kInf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = a[(i0 - 1) * n + (j - 1)] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      if (delta == kInf) return std::nullopt;
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  for (std::size_t j = 1; j <= n; ++j) row_match[p[j] - 1] = j - 1;
  return row_match;
}

// A row decision: a real column, or kEpsilon for deletion.
struct RowChoice {
  std::size_t row;
  std::size_t col;
};

struct Restrictions {
  std::vector<RowChoice> forced;
  std::vector<RowChoice> forbidden;
};

// Square reduction of size n+m. Rows n+k are the dummy rows feeding column k,
// columns m+i are the dummy columns absorbing row i; the dummy-dummy block is 0.
class SquareReduction {
 public:
  explicit SquareReduction(const LsapeInstance& c) : n_(c.rows()), m_(c.cols()), size_(n_ + m_) {
    base_.assign(size_ * size_, kInf);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t k = 0; k < m_; ++k) at(base_, i, k) = c(i, k);
      at(base_, i, m_ + i) = c(i, m_);
    }
    for (std::size_t k = 0; k < m_; ++k) {
      at(base_, n_ + k, k) = c(n_, k);
      for (std::size_t j = 0; j < n_; ++j) at(base_, n_ + k, m_ + j) = 0.0;
    }
  }

  std::optional<Assignment> solve(const Restrictions& r) const {
    std::vector<double> a = base_;
    for (const auto& f : r.forced) {
      const std::size_t col = square_col(f);
      for (std::size_t j = 0; j < size_; ++j) {
        if (j != col) at(a, f.row, j) = kInf;
      }
      for (std::size_t i = 0; i < size_; ++i) {
        if (i != f.row) at(a, i, col) = kInf;
      }
    }
    for (const auto& f : r.forbidden) at(a, f.row, square_col(f)) = kInf;
    auto match = solve_square(a, size_);
    if (!match) return std::nullopt;
    std::vector<std::size_t> rows(n_);
    for (std::size_t i = 0; i < n_; ++i) rows[i] = (*match)[i] < m_ ? (*match)[i] : kEpsilon;
    return Assignment::from_rows(std::move(rows), m_);
  }

 private:
  std::size_t square_col(const RowChoice& f) const { return f.col == kEpsilon ? m_ + f.row : f.col; }
  double& at(std::vector<double>& a, std::size_t i, std::size_t j) const { return a[i * size_ + j]; }

  std::size_t n_, m_, size_;
  std::vector<double> base_;
};

void check_shape(const LsapeInstance& c, const Assignment& a) {
  if (a.rows() != c.rows() || a.cols() != c.cols() || !a.is_feasible()) {
    throw ValidationError("assignment is not feasible for the instance");
  }
}

}  // namespace

LsapeInstance::LsapeInstance(std::size_t rows, std::size_t cols, std::vector<double> costs)
    : rows_(rows), cols_(cols), costs_(std::move(costs)) {
  if (costs_.size() != (rows + 1) * (cols + 1)) {
    throw ValidationError("LSAPE instance has wrong number of entries");
  }
  if (!std::all_of(costs_.begin(), costs_.end(), [](double x) { return std::isfinite(x); })) {
    throw ValidationError("LSAPE instance has non-finite entries");
  }
  if (costs_.back() != 0.0) throw ValidationError("LSAPE instance corner must be 0");
}

LsapeInstance LsapeInstance::from_rows(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) throw ValidationError("LSAPE instance needs at least the dummy row");
  std::vector<double> flat;
  const std::size_t width = rows.front().size();
  for (const auto& r : rows) {
    if (r.size() != width || width == 0) throw ValidationError("ragged LSAPE instance");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return LsapeInstance(rows.size() - 1, width - 1, std::move(flat));
}

Assignment Assignment::from_rows(std::vector<std::size_t> row_to_col, std::size_t cols) {
  Assignment a{std::move(row_to_col), std::vector<std::size_t>(cols, kEpsilon)};
  for (std::size_t i = 0; i < a.row_to_col.size(); ++i) {
    const std::size_t k = a.row_to_col[i];
    if (k == kEpsilon) continue;
    if (k >= cols || a.col_to_row[k] != kEpsilon) {
      throw ValidationError("row decisions do not form a feasible assignment");
    }
    a.col_to_row[k] = i;
  }
  return a;
}

bool Assignment::is_feasible() const {
  for (std::size_t i = 0; i < row_to_col.size(); ++i) {
    const std::size_t k = row_to_col[i];
    if (k != kEpsilon && (k >= col_to_row.size() || col_to_row[k] != i)) return false;
  }
  for (std::size_t k = 0; k < col_to_row.size(); ++k) {
    const std::size_t i = col_to_row[k];
    if (i != kEpsilon && (i >= row_to_col.size() || row_to_col[i] != k)) return false;
  }
  return true;
}

double assignment_cost(const LsapeInstance& c, const Assignment& a) {
  check_shape(c, a);
  double sum = 0.0;
  for (std::size_t i = 0; i < c.rows(); ++i) sum += c(i, a.row_to_col[i]);
  for (std::size_t k = 0; k < c.cols(); ++k) {
    if (a.col_to_row[k] == kEpsilon) sum += c(kEpsilon, k);
  }
  return sum;
}

LsapeSolution solve_optimal(const LsapeInstance& c) {
  auto a = SquareReduction(c).solve({});
  // The unrestricted reduction always has the all-delete/all-insert matching.
  const double cost = assignment_cost(c, *a);
  return {std::move(*a), cost};
}

LsapeSolution solve_greedy(const LsapeInstance& c) {
  std::vector<std::size_t> rows(c.rows(), kEpsilon);
  std::vector<char> taken(c.cols(), 0);
  for (std::size_t i = 0; i < c.rows(); ++i) {
    std::size_t best = kEpsilon;
    double best_cost = kInf;
    for (std::size_t k = 0; k < c.cols(); ++k) {
      if (!taken[k] && c(i, k) < best_cost) {
        best_cost = c(i, k);
        best = k;
      }
    }
    if (c(i, kEpsilon) < best_cost) best = kEpsilon;
    rows[i] = best;
    if (best != kEpsilon) taken[best] = 1;
  }
  auto a = Assignment::from_rows(std::move(rows), c.cols());
  const double cost = assignment_cost(c, a);
  return {std::move(a), cost};
}

std::vector<Assignment> enumerate_optimal(const LsapeInstance& c, std::size_t max_solutions) {
  if (max_solutions == 0) throw ValidationError("number of solutions must be at least 1");
  const SquareReduction reduction(c);
  LsapeSolution root = solve_optimal(c);
  std::vector<Assignment> found{root.assignment};
  const double tol = 1e-9 * std::max(1.0, std::abs(root.cost));

  // Murty partitioning restricted to optimal subproblems. Every solution is
  // identified by its row decisions, so partitioning on rows is exhaustive.
  struct Node {
    Restrictions restrictions;
    Assignment solution;
  };
  std::vector<Node> stack;
  stack.push_back({{}, root.assignment});
  while (!stack.empty() && found.size() < max_solutions) {
    Node node = std::move(stack.back());
    stack.pop_back();
    std::vector<char> is_forced(c.rows(), 0);
    for (const auto& f : node.restrictions.forced) is_forced[f.row] = 1;

    Restrictions prefix = node.restrictions;
    std::vector<Node> children;
    for (std::size_t i = 0; i < c.rows() && found.size() < max_solutions; ++i) {
      if (is_forced[i]) continue;
      const RowChoice choice{i, node.solution.row_to_col[i]};
      Restrictions child = prefix;
      child.forbidden.push_back(choice);
      if (auto sol = reduction.solve(child)) {
        if (assignment_cost(c, *sol) <= root.cost + tol) {
          found.push_back(*sol);
          children.push_back({std::move(child), std::move(*sol)});
        }
      }
      prefix.forced.push_back(choice);
    }
    for (auto it = children.rbegin(); it != children.rend(); ++it) stack.push_back(std::move(*it));
  }
  return found;
}

double brute_force(const LsapeInstance& c) {
  const std::size_t n = c.rows(), m = c.cols();
  if (n > kBruteForceLimit || m > kBruteForceLimit) {
    throw ValidationError("instance too large for brute force");
  }
  std::vector<char> taken(m, 0);
  double best = kInf;
  // Partial sum over decided rows; the remaining columns are inserted at the leaf.
  auto rec = [&](auto&& self, std::size_t i, double partial) -> void {
    if (i == n) {
      double total = partial;
      for (std::size_t k = 0; k < m; ++k) {
        if (!taken[k]) total += c(n, k);
      }
      best = std::min(best, total);
      return;
    }
    self(self, i + 1, partial + c(i, m));
    for (std::size_t k = 0; k < m; ++k) {
      if (taken[k]) continue;
      taken[k] = 1;
      self(self, i + 1, partial + c(i, k));
      taken[k] = 0;
    }
  };
  rec(rec, 0, 0.0);
  return best;
}

}  // namespace ringged
