#include <gtest/gtest.h>

#include <random>

#include "ringged/error.hpp"
#include "ringged/exact.hpp"
#include "ringged/heuristics.hpp"
#include "test_support.hpp"

using namespace ringged;
using namespace ringged::testing;

namespace {

const double kLetterInstance[6][5] = {
    {0.177, 1.406, 1.208, 0.468, 0.675}, {1.203, 0.272, 1.403, 0.832, 0.675},
    {1.226, 1.180, 0.260, 1.259, 0.675}, {0.788, 0.705, 1.346, 0.390, 0.675},
    {1.135, 0.369, 0.906, 0.902, 0.675}, {0.675, 0.675, 0.675, 0.675, 0.0},
};

HeuristicConfig config_for(Method m, std::size_t s = 1) {
  HeuristicConfig c;
  c.method = m;
  c.num_solutions = s;
  return c;
}

const Method kClassical[] = {Method::kRingOpt, Method::kRingGd, Method::kRingMs, Method::kBranchLike,
                             Method::kNodeOnly};

// Graph whose nodes all have degree <= 1.
LabeledGraph random_matching(std::mt19937_64& rng, const std::string& id, std::size_t n) {
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<Label> nodes;
  for (std::size_t i = 0; i < n; ++i) nodes.push_back(sym(std::to_string(rng() % 3)));
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; i += 2) {
    if (rng() % 3 != 0) edges.push_back({order[i], order[i + 1], sym(std::to_string(rng() % 2))});
  }
  return LabeledGraph(id, nodes, edges);
}

}  // namespace

TEST(Methods, Parse) {
  for (Method m : kClassical) EXPECT_EQ(parse_method(to_string(m)), m);
  EXPECT_EQ(parse_method("ring_ml"), Method::kRingMl);
  EXPECT_THROW(parse_method("walks"), ValidationError);
}

TEST(Config, Validation) {
  HeuristicConfig c;
  c.ring_size = 0;
  EXPECT_THROW(c.validate(), ValidationError);
  c = HeuristicConfig{};
  c.num_solutions = 0;
  EXPECT_THROW(c.validate(), ValidationError);
  c = HeuristicConfig{};
  c.ring_size = 2;
  EXPECT_THROW(c.validate(), ValidationError);
  c.lambda = LambdaWeights::uniform(2);
  EXPECT_NO_THROW(c.validate());
  const auto g = unlabeled("g", 2, {{0, 1}});
  EXPECT_THROW(upper_bound(g, g, config_for(Method::kRingMl), *constant_cost_model(1, 1, 1, 1, 1, 1)),
               ValidationError);
}

TEST(Populate, NodeOnlyReproducesLetterMatrix) {
  const auto c = populate_instance(letter_g(), letter_h(), config_for(Method::kNodeOnly), *letter_cost_model());
  ASSERT_EQ(c.rows(), 5u);
  ASSERT_EQ(c.cols(), 4u);
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t k = 0; k < 5; ++k) EXPECT_NEAR(c(i, k), kLetterInstance[i][k], 0.001) << i << "," << k;
  }
}

TEST(Populate, ShapeAndZeroDiagonal) {
  const auto costs = constant_cost_model(1, 1, 1, 1, 1, 1);
  const auto a = symbol_graph("a", {"a"}, {}), b = symbol_graph("b", {"b"}, {});
  const auto c = populate_instance(a, b, config_for(Method::kRingOpt), *costs);
  EXPECT_EQ(c.rows(), 1u);
  EXPECT_EQ(c.cols(), 1u);
  EXPECT_EQ(c(1, 1), 0.0);
  std::mt19937_64 rng(1);
  const auto g = random_graph(rng, "g", 7, 0.4, 2);
  for (Method m : kClassical) {
    const auto d = populate_instance(g, g, config_for(m), *costs);
    for (std::size_t i = 0; i < 7; ++i) EXPECT_EQ(d(i, i), 0.0) << to_string(m);
  }
}

TEST(UpperBound, LetterNodeOnly) {
  const auto r = upper_bound(letter_g(), letter_h(), config_for(Method::kNodeOnly), *letter_cost_model());
  EXPECT_EQ(r.map.row_to_col, (std::vector<std::size_t>{0, 1, 2, 3, kEpsilon}));
  const auto [node, edge] = induced_edit_cost_parts(letter_g(), letter_h(), r.map, *letter_cost_model());
  EXPECT_NEAR(node, 1.774, 0.002);
  EXPECT_NEAR(edge, 0.850, 1e-12);
  EXPECT_DOUBLE_EQ(r.bound, node + edge);
  EXPECT_GE(r.seconds, 0.0);
}

TEST(UpperBound, SelfPairIsZero) {
  std::mt19937_64 rng(2);
  const auto costs = constant_cost_model(1, 1, 1, 1, 1, 1);
  for (int t = 0; t < 20; ++t) {
    const auto g = random_graph(rng, "g", 1 + rng() % 8, 0.4, 1 + t % 3);
    for (Method m : kClassical) EXPECT_EQ(upper_bound(g, g, config_for(m), *costs).bound, 0.0) << to_string(m);
  }
}

TEST(UpperBound, ValidAndTightenedBySolutions) {
  std::mt19937_64 rng(3);
  const auto costs = constant_cost_model(1, 1, 1, 1, 1, 1);
  for (int t = 0; t < 40; ++t) {
    const auto g = random_graph(rng, "g", 6, 0.4, 1 + t % 2);
    const auto h = random_graph(rng, "h", 6, 0.4, 1 + t % 2);
    const double ged = exact_ged(g, h, *costs).bound;
    for (Method m : kClassical) {
      const auto one = upper_bound(g, h, config_for(m, 1), *costs);
      const auto ten = upper_bound(g, h, config_for(m, 10), *costs);
      EXPECT_GE(one.bound, ged - 1e-9);
      EXPECT_GE(ten.bound, ged - 1e-9);
      EXPECT_LE(ten.bound, one.bound + 1e-12);
      EXPECT_DOUBLE_EQ(one.bound, induced_edit_cost(g, h, one.map, *costs));
      auto greedy = config_for(m);
      greedy.greedy_final_solve = true;
      EXPECT_GE(upper_bound(g, h, greedy, *costs).bound, ged - 1e-9);
    }
  }
}

TEST(UpperBound, ThreadCountDoesNotChangeResults) {
  std::mt19937_64 rng(4);
  const auto costs = constant_cost_model(1, 2, 2, 1, 1, 1);
  const auto g = random_graph(rng, "g", 9, 0.3, 2);
  const auto h = random_graph(rng, "h", 8, 0.3, 2);
  for (Method m : kClassical) {
    auto c1 = config_for(m, 3);
    auto c4 = c1;
    c4.threads = 4;
    const auto a = upper_bound(g, h, c1, *costs), b = upper_bound(g, h, c4, *costs);
    EXPECT_EQ(a.bound, b.bound);
    EXPECT_EQ(a.map, b.map);
  }
}

TEST(BranchLike, Examples) {
  const auto costs = constant_cost_model(1, 1, 1, 1, 0.425, 0.425);
  const auto g = symbol_graph("g", {"a", "b", "c"}, {{0, 1}, {0, 2}});
  const auto h = symbol_graph("h", {"a", "b"}, {});
  EXPECT_EQ(branch_like_distance(g, g, 0, 0, *costs), 0.0);
  EXPECT_NEAR(branch_like_distance(g, h, 0, 0, *costs), 0.0 + 0.425, 1e-15);
  EXPECT_NEAR(branch_like_distance(g, h, 0, 1, *costs), 1.0 + 0.425, 1e-15);
  EXPECT_NEAR(branch_like_distance(h, g, kEpsilon, 0, *costs), 1.0 + 0.5 * 0.85, 1e-15);
}

TEST(BranchLike, SizeOneRingSharesOptimaOnLowDegreeGraphs) {
  std::mt19937_64 rng(5);
  const auto costs = constant_cost_model(1, 1.5, 1.5, 1, 0.5, 0.5);
  HeuristicConfig ring = config_for(Method::kRingOpt);
  ring.ring_size = 1;
  ring.lambda = LambdaWeights({1.0});
  ring.alpha = AlphaWeights({2.0 / 3, 0, 1.0 / 3});
  for (int t = 0; t < 100; ++t) {
    const auto g = random_matching(rng, "g", 1 + rng() % 6);
    const auto h = random_matching(rng, "h", 1 + rng() % 6);
    const auto cr = populate_instance(g, h, ring, *costs);
    const auto cb = populate_instance(g, h, config_for(Method::kBranchLike), *costs);
    for (std::size_t i = 0; i <= g.num_nodes(); ++i) {
      for (std::size_t k = 0; k <= h.num_nodes(); ++k) EXPECT_NEAR(cr(i, k), 2.0 / 3 * cb(i, k), 1e-12);
    }
    const auto opt_r = solve_optimal(cr), opt_b = solve_optimal(cb);
    EXPECT_NEAR(assignment_cost(cb, opt_r.assignment), opt_b.cost, 1e-9);
    EXPECT_NEAR(assignment_cost(cr, opt_b.assignment), opt_r.cost, 1e-9);
  }
}
