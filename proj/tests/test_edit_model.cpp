#include <gtest/gtest.h>

#include <random>

#include "ringged/edit_model.hpp"
#include "ringged/error.hpp"
#include "ringged/exact.hpp"
#include "ringged/heuristics.hpp"
#include "test_support.hpp"

using namespace ringged;
using namespace ringged::testing;

namespace {

NodeMap identity_map(std::size_t n) {
  std::vector<std::size_t> rows(n);
  for (std::size_t i = 0; i < n; ++i) rows[i] = i;
  return NodeMap::from_rows(rows, n);
}

NodeMap random_map(std::mt19937_64& rng, std::size_t n, std::size_t m) {
  std::vector<std::size_t> cols(m);
  for (std::size_t k = 0; k < m; ++k) cols[k] = k;
  std::shuffle(cols.begin(), cols.end(), rng);
  std::vector<std::size_t> rows(n, kEpsilon);
  std::size_t next = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (next < m && rng() % 3 != 0) rows[i] = cols[next++];
  }
  return NodeMap::from_rows(rows, m);
}

}  // namespace

TEST(InducedCost, IdentityIsFree) {
  std::mt19937_64 rng(1);
  const auto costs = constant_cost_model(1, 1, 1, 1, 1, 1);
  for (int t = 0; t < 20; ++t) {
    const auto g = random_graph(rng, "g", 6, 0.5, 3);
    EXPECT_EQ(induced_edit_cost(g, g, identity_map(6), *costs), 0.0);
  }
}

TEST(InducedCost, LetterExample) {
  const auto g = letter_g(), h = letter_h();
  const auto map = NodeMap::from_rows({0, 1, 2, 3, kEpsilon}, 4);
  const auto [node, edge] = induced_edit_cost_parts(g, h, map, *letter_cost_model());
  EXPECT_NEAR(node, 1.774, 0.002);
  EXPECT_NEAR(edge, 0.850, 1e-12);
  EXPECT_NEAR(induced_edit_cost(g, h, map, *letter_cost_model()), 2.62, 0.02);
}

TEST(InducedCost, SingleSubstitution) {
  const auto a = symbol_graph("a", {"a"}, {});
  const auto b = symbol_graph("b", {"b"}, {});
  const auto costs = constant_cost_model(1, 1, 1, 1, 1, 1);
  EXPECT_EQ(induced_edit_cost(a, b, NodeMap::from_rows({0}, 1), *costs), 1.0);
  EXPECT_EQ(induced_edit_cost(a, b, NodeMap::from_rows({kEpsilon}, 1), *costs), 2.0);
}

TEST(InducedCost, EdgeSubstitutionDeletionInsertion) {
  // G: 0-1 (x), 1-2 (y). H: 0-1 (x), 0-2 (z). Identity map keeps 0-1, deletes 1-2, inserts 0-2.
  LabeledGraph g("g", {sym("a"), sym("a"), sym("a")}, {{0, 1, sym("x")}, {1, 2, sym("y")}});
  LabeledGraph h("h", {sym("a"), sym("a"), sym("a")}, {{0, 1, sym("x")}, {0, 2, sym("z")}});
  const auto costs = constant_cost_model(1, 1, 1, 10, 100, 1000);
  EXPECT_EQ(induced_edit_cost(g, h, identity_map(3), *costs), 1100.0);
  // Swapping 1 and 2: 0-1 lands on 0-2 (x->z), 1-2 is deleted, 0-1 of H is inserted.
  EXPECT_EQ(induced_edit_cost(g, h, NodeMap::from_rows({0, 2, 1}, 3), *costs), 1110.0);
  // Deleting node 2 of G and inserting node 2 of H.
  EXPECT_EQ(induced_edit_cost(g, h, NodeMap::from_rows({0, 1, kEpsilon}, 3), *costs), 2 + 100 + 1000);
}

TEST(InducedCost, RejectsMismatchedMap) {
  const auto g = unlabeled("g", 2, {{0, 1}});
  const auto costs = constant_cost_model(1, 1, 1, 1, 1, 1);
  EXPECT_THROW(induced_edit_cost(g, g, identity_map(3), *costs), ValidationError);
  EXPECT_THROW(upper_bound_from_solutions(g, g, {}, *costs), ValidationError);
}

TEST(InducedCost, BoundsExactAndSymmetric) {
  std::mt19937_64 rng(2);
  const auto costs = constant_cost_model(1, 2, 2, 1, 1.5, 1.5);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 1 + rng() % 5, m = 1 + rng() % 5;
    const auto g = random_graph(rng, "g", n, 0.5, 2);
    const auto h = random_graph(rng, "h", m, 0.5, 2);
    const double ged = enumerate_ged(g, h, *costs);
    for (int k = 0; k < 5; ++k) {
      const auto map = random_map(rng, n, m);
      const double c = induced_edit_cost(g, h, map, *costs);
      EXPECT_GE(c, ged - 1e-9);
      EXPECT_NEAR(c, induced_edit_cost(h, g, map.inverse(), *costs), 1e-12);
    }
  }
}

TEST(UpperBoundFromSolutions, MinimumOverList) {
  std::mt19937_64 rng(3);
  const auto costs = constant_cost_model(1, 1, 1, 1, 1, 1);
  const auto g = random_graph(rng, "g", 5, 0.5, 2);
  const auto h = random_graph(rng, "h", 5, 0.5, 2);
  std::vector<NodeMap> maps;
  for (int k = 0; k < 8; ++k) maps.push_back(random_map(rng, 5, 5));
  const auto best = upper_bound_from_solutions(g, h, maps, *costs);
  for (const auto& m : maps) EXPECT_LE(best.bound, induced_edit_cost(g, h, m, *costs));
  EXPECT_EQ(best.bound, induced_edit_cost(g, h, best.map, *costs));
  const auto single = upper_bound_from_solutions(g, h, std::span(maps.data(), 1), *costs);
  EXPECT_EQ(single.bound, induced_edit_cost(g, h, maps[0], *costs));
  maps.push_back(identity_map(5));
  EXPECT_EQ(upper_bound_from_solutions(g, g, maps, *costs).bound, 0.0);
}

TEST(UpperBoundFromSolutions, EnumeratedOptimaTighten) {
  std::mt19937_64 rng(4);
  const auto costs = constant_cost_model(1, 1, 1, 1, 1, 1);
  HeuristicConfig config;
  config.method = Method::kNodeOnly;
  for (int t = 0; t < 30; ++t) {
    const auto g = random_graph(rng, "g", 5, 0.5, 2);
    const auto h = random_graph(rng, "h", 5, 0.5, 2);
    const auto c = populate_instance(g, h, config, *costs);
    const auto sols = enumerate_optimal(c, 10);
    const double first = induced_edit_cost(g, h, sols.front(), *costs);
    EXPECT_LE(upper_bound_from_solutions(g, h, sols, *costs).bound, first);
  }
}
