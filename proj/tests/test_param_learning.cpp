#include <gtest/gtest.h>

#include "ringged/error.hpp"
#include "ringged/param_learning.hpp"
#include "ringged/synthetic.hpp"
#include "test_support.hpp"

using namespace ringged;
using namespace ringged::testing;

namespace {

const auto kUnit = constant_cost_model(1, 1, 1, 1, 1, 1);

std::vector<LabeledGraph> desk_trees(std::size_t count, std::uint64_t seed) {
  TreeDatasetSpec spec;
  spec.min_size = 4;
  spec.max_size = 7;
  spec.count = count;
  spec.seed = seed;
  return generate_trees(spec).graphs;
}

}  // namespace

TEST(Objective, Multiplier) {
  EXPECT_DOUBLE_EQ(objective_multiplier(LambdaWeights({0.5, 0.5, 0.0}), 3, 1.0), 1.0);
  EXPECT_DOUBLE_EQ(objective_multiplier(LambdaWeights({0.0, 1.0, 0.0}), 3, 0.0), 0.0);
  EXPECT_DOUBLE_EQ(objective_multiplier(LambdaWeights({0.5, 0.5, 0.0}), 3, 0.5), 0.75);
  EXPECT_DOUBLE_EQ(objective_multiplier(LambdaWeights({1.0}), 1, 0.5), 0.5);
  EXPECT_EQ(support_size(LambdaWeights({1.0 - 1e-7, 1e-7})), 1u);
  EXPECT_EQ(effective_ring_size(LambdaWeights({0.5, 0.5, 0.0, 0.0})), 2u);
}

TEST(Objective, MuOneIsBoundSum) {
  const auto trees = desk_trees(4, 1);
  RingParams p;
  TrainingObjectiveConfig cfg;
  double sum = 0.0;
  HeuristicConfig hc;
  for (const auto& g : trees) {
    for (const auto& h : trees) {
      if (&g != &h) sum += upper_bound(g, h, hc, *kUnit).bound;
    }
  }
  EXPECT_DOUBLE_EQ(objective_f(trees, p, cfg, *kUnit), sum);
  cfg.mu = 0.0;
  p.lambda = LambdaWeights({0.0, 1.0, 0.0});
  EXPECT_EQ(objective_f(trees, p, cfg, *kUnit), 0.0);
  cfg.mu = 0.5;
  p.lambda = LambdaWeights({0.5, 0.5, 0.0});
  HeuristicConfig hc2;
  hc2.lambda = p.lambda;
  double sum2 = 0.0;
  for (const auto& g : trees) {
    for (const auto& h : trees) {
      if (&g != &h) sum2 += upper_bound(g, h, hc2, *kUnit).bound;
    }
  }
  EXPECT_DOUBLE_EQ(objective_f(trees, p, cfg, *kUnit), 0.75 * sum2);
}

TEST(Objective, CachedTermsMatchDirectComputation) {
  const auto trees = desk_trees(5, 2);
  TrainingObjectiveConfig cfg;
  cfg.threads = 3;
  for (auto kind : {SetDistanceKind::kLsapeOptimal, SetDistanceKind::kLsapeGreedy, SetDistanceKind::kMultiset}) {
    cfg.kind = kind;
    const RingObjective objective(trees, 6, cfg, *kUnit);
    EXPECT_EQ(objective.num_pairs(), 20u);
    for (std::size_t size : {1u, 2u, 4u}) {
      RingParams p;
      p.ring_size = size;
      p.alpha = AlphaWeights({0.2, 0.3, 0.5});
      p.lambda = LambdaWeights::uniform(size);
      EXPECT_DOUBLE_EQ(objective(p.alpha, p.lambda), objective_f(trees, p, cfg, *kUnit));
    }
  }
}

TEST(Learn, Contract) {
  const auto trees = desk_trees(6, 3);
  TrainingObjectiveConfig cfg;
  cfg.restarts = 2;
  cfg.seed = 9;
  const auto learned = learn_ring_params(trees, cfg, *kUnit);
  std::size_t max_diam = 0;
  for (const auto& g : trees) max_diam = std::max(max_diam, diameter(g));
  EXPECT_EQ(learned.initial_ring_size, 1 + max_diam);
  learned.params.validate();
  EXPECT_EQ(learned.params.ring_size, effective_ring_size(learned.params.lambda));
  EXPECT_LE(learned.params.ring_size, learned.initial_ring_size);
  EXPECT_LE(learned.objective, learned.uniform_objective);
  EXPECT_DOUBLE_EQ(learned.objective, objective_f(trees, learned.params, cfg, *kUnit));
  const auto again = learn_ring_params(trees, cfg, *kUnit);
  EXPECT_EQ(again.params.lambda.values, learned.params.lambda.values);
  EXPECT_EQ(again.params.alpha.values, learned.params.alpha.values);
}

TEST(Learn, InitialSizeFromDiameter) {
  const std::vector<LabeledGraph> paths{unlabeled("p2", 3, {{0, 1}, {1, 2}}), unlabeled("p1", 2, {{0, 1}})};
  TrainingObjectiveConfig cfg;
  cfg.restarts = 0;
  EXPECT_EQ(learn_ring_params(paths, cfg, *kUnit).initial_ring_size, 3u);
}

TEST(Learn, SingleGraphAndErrors) {
  const std::vector<LabeledGraph> one{unlabeled("g", 3, {{0, 1}})};
  TrainingObjectiveConfig cfg;
  const auto learned = learn_ring_params(one, cfg, *kUnit);
  EXPECT_EQ(learned.objective, 0.0);
  learned.params.validate();
  EXPECT_THROW(learn_ring_params({}, cfg, *kUnit), ValidationError);
  cfg.mu = 1.5;
  EXPECT_THROW(learn_ring_params(one, cfg, *kUnit), ValidationError);
}

TEST(ParamsFile, JsonRoundTrip) {
  RingParamsFile f;
  f.collection = "desk";
  f.kind = SetDistanceKind::kMultiset;
  f.params.ring_size = 2;
  f.params.alpha = AlphaWeights({0.25, 0.25, 0.5});
  f.params.lambda = LambdaWeights({0.75, 0.25});
  f.mu = 0.5;
  f.seed = 42;
  const auto back = ring_params_from_json(ring_params_to_json(f));
  EXPECT_EQ(back.collection, "desk");
  EXPECT_EQ(back.kind, SetDistanceKind::kMultiset);
  EXPECT_EQ(back.params.ring_size, 2u);
  EXPECT_EQ(back.params.alpha.values, f.params.alpha.values);
  EXPECT_EQ(back.params.lambda.values, f.params.lambda.values);
  EXPECT_EQ(back.mu, 0.5);
  EXPECT_EQ(back.seed, 42u);
  EXPECT_THROW(ring_params_from_json(R"({"L":3,"alpha":[1,0,0],"lambda":[1]})"), ValidationError);
  EXPECT_THROW(ring_params_from_json(R"({"L":1,"alpha":[1,1,0],"lambda":[1]})"), ValidationError);
}
