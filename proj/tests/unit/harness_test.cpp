#include <gtest/gtest.h>

#include <algorithm>

#include "srgmcs/error.hpp"
#include "srgmcs/harness.hpp"
#include "srgmcs/objective.hpp"

namespace srgmcs {
namespace {

FailureDataset synthetic(ModelKind kind, Params p, double noise = 0.0, std::uint64_t seed = 0,
                         std::string name = "syn") {
  const FailureDataset g = generate(kind, p, time_grid(1, 50), noise, seed, name);
  return FailureDataset(name, {g.records().begin(), g.records().end()});
}

CsConfig quick(std::uint64_t seed = 0, std::size_t gens = 60) {
  CsConfig cfg;
  cfg.seed = seed;
  cfg.max_generations = gens;
  return cfg;
}

TEST(Fit, ReportFieldsAndFirewall) {
  const FailureDataset ds = synthetic(ModelKind::GoelOkumoto, {500, 0.05}, 3.0, 1);
  const FitReport r = fit(ModelKind::GoelOkumoto, ds, {0.7}, quick(4));
  EXPECT_EQ(ModelKind::GoelOkumoto, r.model);
  EXPECT_EQ("syn", r.dataset_name);
  EXPECT_EQ(0.7, r.split.train_fraction);
  EXPECT_EQ(4u, r.seed);
  EXPECT_EQ(4u, r.config.seed);
  EXPECT_EQ(60u, r.engine.generations);
  EXPECT_EQ(quick().expected_evaluations(), r.engine.evaluations);
  EXPECT_TRUE(validate(r.params, default_bounds()));
  ASSERT_TRUE(r.test_rmse.has_value());

  auto [train, test] = split(ds, {0.7});
  EXPECT_NEAR(*r.test_rmse, evaluate_on(ModelKind::GoelOkumoto, r.params, test), 1e-12);
  EXPECT_NEAR(r.train_rmse, evaluate_on(ModelKind::GoelOkumoto, r.params, train), 1e-12);
}

TEST(Fit, FullTrainingHasNoTestRmse) {
  const FailureDataset ds = synthetic(ModelKind::MusaOkumoto, {200, 0.05});
  const FitReport r = fit(ModelKind::MusaOkumoto, ds, {1.0}, quick());
  EXPECT_FALSE(r.test_rmse.has_value());
  EXPECT_EQ(r, train_full(ModelKind::MusaOkumoto, ds, quick()));
}

TEST(Fit, NoiselessGoSplitGeneralises) {
  const FailureDataset ds = synthetic(ModelKind::GoelOkumoto, {500, 0.05});
  const FitReport r = fit(ModelKind::GoelOkumoto, ds, {0.7}, quick(0, 1000), 10);
  EXPECT_LE(r.train_rmse, 1.0);
  ASSERT_TRUE(r.test_rmse.has_value());
  EXPECT_LE(*r.test_rmse, 2.0);
}

TEST(Fit, Deterministic) {
  const FailureDataset ds = synthetic(ModelKind::Power, {5, 0.6}, 1.0, 2);
  EXPECT_EQ(fit(ModelKind::Power, ds, {0.8}, quick(3), 4), fit(ModelKind::Power, ds, {0.8}, quick(3), 4));
}

TEST(Fit, BestOfSeedsIsTheMinimumOfIndividualRuns) {
  const FailureDataset ds = synthetic(ModelKind::DelayedSShaped, {500, 0.05}, 4.0, 9);
  const FitReport best = fit(ModelKind::DelayedSShaped, ds, {0.7}, quick(10), 5);
  std::vector<double> individual;
  for (std::uint64_t s = 10; s < 15; ++s) {
    individual.push_back(fit(ModelKind::DelayedSShaped, ds, {0.7}, quick(s)).train_rmse);
  }
  EXPECT_EQ(*std::min_element(individual.begin(), individual.end()), best.train_rmse);
  const auto winner = std::min_element(individual.begin(), individual.end()) - individual.begin();
  EXPECT_EQ(10u + winner, best.seed);
  EXPECT_EQ(5u, best.aggregate.n_seeds);
  EXPECT_EQ(10u, best.aggregate.base_seed);
  double mean = 0;
  for (double v : individual) mean += v / 5;
  EXPECT_NEAR(mean, best.aggregate.mean_train_rmse, 1e-12);
  EXPECT_GT(best.aggregate.sd_train_rmse, 0.0);
}

TEST(Fit, RejectsBadInputs) {
  const FailureDataset ds = synthetic(ModelKind::GoelOkumoto, {500, 0.05});
  EXPECT_THROW(fit(ModelKind::GoelOkumoto, ds, {0.3}, quick()), ConfigError);
  EXPECT_THROW(fit(ModelKind::GoelOkumoto, ds, {0.7}, quick(), 0), ConfigError);
  CsConfig bad = quick();
  bad.n_nests = 1;
  EXPECT_THROW(fit(ModelKind::GoelOkumoto, ds, {0.7}, bad), ConfigError);
}

TEST(SplitStudy, RowsOrderedByDescendingFraction) {
  const FailureDataset ds = synthetic(ModelKind::GoelOkumoto, {500, 0.05}, 2.0, 5);
  const std::vector<double> fractions{0.5, 0.9, 0.7, 0.6, 0.8};
  const SplitStudyReport r = split_study(ModelKind::GoelOkumoto, ds, fractions, quick(7));
  ASSERT_EQ(5u, r.rows.size());
  const std::vector<double> expected = default_fractions();
  for (std::size_t i = 0; i < 5; ++i) {
    EXPECT_EQ(expected[i], r.rows[i].train_fraction);
    const FitReport single = fit(ModelKind::GoelOkumoto, ds, {expected[i]}, quick(7));
    EXPECT_EQ(single.train_rmse, r.rows[i].train_rmse);
    EXPECT_EQ(single.test_rmse, r.rows[i].test_rmse);
    EXPECT_EQ(single.params, r.rows[i].params);
  }
}

TEST(SplitStudy, RejectsDuplicateOrInvalidFractions) {
  const FailureDataset ds = synthetic(ModelKind::GoelOkumoto, {500, 0.05});
  const std::vector<double> dup{0.7, 0.7};
  const std::vector<double> low{0.4};
  EXPECT_THROW(split_study(ModelKind::GoelOkumoto, ds, dup, quick()), ConfigError);
  EXPECT_THROW(split_study(ModelKind::GoelOkumoto, ds, low, quick()), ConfigError);
  EXPECT_THROW(split_study(ModelKind::GoelOkumoto, ds, std::vector<double>{}, quick()), ConfigError);
}

TEST(Compare, GridLayoutAndDerivedSeeds) {
  std::vector<FailureDataset> datasets{
      synthetic(ModelKind::GoelOkumoto, {500, 0.05}, 2.0, 1, "d1"),
      synthetic(ModelKind::DelayedSShaped, {300, 0.1}, 2.0, 2, "d2"),
      synthetic(ModelKind::MusaOkumoto, {200, 0.05}, 2.0, 3, "d3")};
  const auto kinds = kAllModels;
  const CompareReport r = compare(kinds, datasets, quick(100, 30), 2);
  ASSERT_EQ(12u, r.cells.size());
  for (std::size_t d = 0; d < 3; ++d) {
    for (std::size_t m = 0; m < 4; ++m) {
      const FitReport& cell = r.at(d, m);
      EXPECT_EQ(datasets[d].name(), cell.dataset_name);
      EXPECT_EQ(kinds[m], cell.model);
      EXPECT_EQ(100u + d * 4 + m, cell.aggregate.base_seed);
      EXPECT_EQ(cell, train_full(kinds[m], datasets[d], quick(100 + d * 4 + m, 30), 2));
    }
  }
  EXPECT_EQ(r, compare(kinds, datasets, quick(100, 30), 2));
}

TEST(ParallelFor, VisitsEveryIndexAndRethrows) {
  std::vector<int> hits(1000, 0);
  parallel_for(hits.size(), [&](std::size_t i) { hits[i] += 1; }, 8);
  EXPECT_TRUE(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
  EXPECT_THROW(parallel_for(10, [](std::size_t i) { if (i == 7) throw ConfigError("x"); }, 4),
               ConfigError);
}

}  // namespace
}  // namespace srgmcs
