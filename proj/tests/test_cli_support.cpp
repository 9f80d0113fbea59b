#include <gtest/gtest.h>

#include <functional>
#include <set>
#include <sstream>

#include "ringged/dataset_io.hpp"
#include "ringged/error.hpp"
#include "ringged/evaluation.hpp"
#include "ringged/synthetic.hpp"
#include "test_support.hpp"

using namespace ringged;
using namespace ringged::testing;

namespace {

GraphCollection classed(const std::vector<std::string>& ids, const std::vector<std::string>& classes) {
  GraphCollection c;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    c.graphs.emplace_back(ids[i], std::vector<Label>{sym("a")}, std::vector<Edge>{}, classes[i]);
  }
  return c;
}

std::vector<BoundRow> rows_from(const GraphCollection& c, const std::function<double(std::size_t, std::size_t)>& d) {
  std::vector<BoundRow> rows;
  for (std::size_t i = 0; i < c.graphs.size(); ++i) {
    for (std::size_t j = 0; j < c.graphs.size(); ++j) {
      if (i != j) rows.push_back({c.graphs[i].id(), c.graphs[j].id(), d(i, j), 0.0});
    }
  }
  return rows;
}

}  // namespace

TEST(Synthetic, CanonicalFormDetectsIsomorphism) {
  const auto a = unlabeled("a", 4, {{0, 1}, {1, 2}, {2, 3}});
  const auto b = unlabeled("b", 4, {{2, 0}, {0, 3}, {3, 1}});
  const auto star = unlabeled("s", 4, {{0, 1}, {0, 2}, {0, 3}});
  EXPECT_EQ(canonical_tree_form(a), canonical_tree_form(b));
  EXPECT_NE(canonical_tree_form(a), canonical_tree_form(star));
  EXPECT_THROW(canonical_tree_form(unlabeled("c", 3, {{0, 1}, {1, 2}, {0, 2}})), ValidationError);
  EXPECT_THROW(canonical_tree_form(unlabeled("d", 4, {{0, 1}, {2, 3}})), ValidationError);
}

TEST(Synthetic, GeneratesDistinctTrees) {
  TreeDatasetSpec spec;
  spec.min_size = 8;
  spec.max_size = 12;
  spec.alphabet = 1;
  spec.count = 20;
  spec.seed = 7;
  const auto c = generate_trees(spec);
  ASSERT_EQ(c.graphs.size(), 20u);
  std::set<std::string> forms;
  for (const auto& g : c.graphs) {
    EXPECT_GE(g.num_nodes(), 8u);
    EXPECT_LE(g.num_nodes(), 12u);
    EXPECT_EQ(g.num_edges() + 1, g.num_nodes());
    for (const auto& l : g.node_labels()) EXPECT_EQ(l, sym("1"));
    forms.insert(canonical_tree_form(g));
  }
  EXPECT_EQ(forms.size(), 20u);
  EXPECT_EQ(serialize_collection(c), serialize_collection(generate_trees(spec)));
  spec.alphabet = 10;
  std::set<std::string> labels;
  for (const auto& g : generate_trees(spec).graphs) {
    for (const auto& l : g.node_labels()) labels.insert(l.symbol());
  }
  for (const auto& l : labels) {
    const int v = std::stoi(l);
    EXPECT_GE(v, 1);
    EXPECT_LE(v, 10);
  }
  EXPECT_GT(labels.size(), 5u);
}

TEST(Synthetic, ReportsAchievableCount) {
  TreeDatasetSpec spec;
  spec.min_size = 4;
  spec.max_size = 5;  // 2 + 3 unlabeled trees
  spec.count = 6;
  spec.max_attempts = 5000;
  try {
    generate_trees(spec);
    FAIL() << "expected an error";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("only generate 5"), std::string::npos) << e.what();
  }
  spec.count = 5;
  EXPECT_EQ(generate_trees(spec).graphs.size(), 5u);
  spec.alphabet = 0;
  EXPECT_THROW(generate_trees(spec), ValidationError);
}

TEST(Csv, RoundTripAndFooter) {
  const std::vector<BoundRow> rows{{"a", "b", 1.5, 0.25}, {"b", "a", 0.1, 0.75}};
  std::stringstream ss;
  write_bounds_csv(ss, rows);
  const std::string text = ss.str();
  EXPECT_EQ(text.rfind("g_id,h_id,bound,seconds\n", 0), 0u);
  EXPECT_NE(text.find("#avg,,0.80000000000000004,0.5\n"), std::string::npos) << text;
  const auto back = read_bounds_csv(ss);
  ASSERT_EQ(back.size(), 2u);
  EXPECT_EQ(back[1].h_id, "a");
  EXPECT_EQ(back[1].bound, 0.1);
  std::stringstream bad("g_id,h_id,bound,seconds\na,b,x,1\n");
  EXPECT_THROW(read_bounds_csv(bad), ValidationError);
}

TEST(Knn, PerfectSeparation) {
  const auto c = classed({"a", "b", "c", "d"}, {"x", "x", "y", "y"});
  const auto rows = rows_from(c, [](std::size_t i, std::size_t j) { return (i < 2) == (j < 2) ? 0.0 : 10.0; });
  EXPECT_EQ(knn_accuracy(c, rows), 1.0);
}

TEST(Knn, SingleClass) {
  const auto c = classed({"a", "b", "c"}, {"x", "x", "x"});
  EXPECT_EQ(knn_accuracy(c, rows_from(c, [](std::size_t i, std::size_t j) { return double(i + j); })), 1.0);
}

TEST(Knn, InvertedDistancesAndTies) {
  // Same-class pairs far, cross-class near: every neighbor is wrong.
  const auto c = classed({"a", "b", "c", "d"}, {"x", "x", "y", "y"});
  EXPECT_EQ(knn_accuracy(c, rows_from(c, [](std::size_t i, std::size_t j) { return (i < 2) == (j < 2) ? 10.0 : 1.0; })), 0.0);
  // All distances equal: neighbor is the smallest other id. a->b (x, right), b->a (right),
  // c->a (wrong), d->a (wrong).
  EXPECT_EQ(knn_accuracy(c, rows_from(c, [](std::size_t, std::size_t) { return 3.0; })), 0.5);
}

TEST(Knn, Errors) {
  GraphCollection none;
  none.graphs.push_back(unlabeled("a", 1, {}));
  none.graphs.push_back(unlabeled("b", 1, {}));
  EXPECT_THROW(knn_accuracy(none, {}), ValidationError);
  const auto c = classed({"a", "b"}, {"x", "y"});
  EXPECT_THROW(knn_accuracy(c, {{"a", "b", 1.0, 0.0}}), ValidationError);
}

TEST(ComputeBounds, OrderedPairsAndDeterminism) {
  const auto c = classed({"a", "b"}, {"x", "y"});
  HeuristicConfig config;
  const auto costs = constant_cost_model(1, 1, 1, 1, 1, 1);
  const auto rows = compute_bounds(c, config, *costs);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].g_id, "a");
  EXPECT_EQ(rows[1].g_id, "b");
  TreeDatasetSpec spec;
  spec.min_size = 5;
  spec.max_size = 8;
  spec.count = 6;
  const auto trees = generate_trees(spec);
  auto many = config;
  many.threads = 4;
  const auto r1 = compute_bounds(trees, config, *costs), r4 = compute_bounds(trees, many, *costs);
  ASSERT_EQ(r1.size(), 30u);
  for (std::size_t i = 0; i < r1.size(); ++i) {
    EXPECT_EQ(r1[i].g_id, r4[i].g_id);
    EXPECT_EQ(r1[i].h_id, r4[i].h_id);
    EXPECT_EQ(r1[i].bound, r4[i].bound);
  }
  std::size_t row = 0;
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      if (i == j) continue;
      EXPECT_EQ(r1[row].g_id, trees.graphs[i].id());
      EXPECT_EQ(r1[row].bound, upper_bound(trees.graphs[i], trees.graphs[j], config, *costs).bound);
      ++row;
    }
  }
}
