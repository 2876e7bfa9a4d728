#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <limits>

#include "oracle.hpp"
#include "srgmcs/cuckoo.hpp"
#include "srgmcs/error.hpp"
#include "srgmcs/objective.hpp"

namespace srgmcs {
namespace {

double median(std::vector<double> v) {
  std::nth_element(v.begin(), v.begin() + v.size() / 2, v.end());
  return v[v.size() / 2];
}

double quantile(std::vector<double> v, double q) {
  std::sort(v.begin(), v.end());
  return v[static_cast<std::size_t>(q * (v.size() - 1))];
}

Objective model_objective(ModelKind kind) {
  const Params truth = kind == ModelKind::Power ? Params{5, 0.6} : Params{300, 0.05};
  const FailureDataset ds = generate(kind, truth, time_grid(1, 40), 0.0, 0);
  return Objective(kind, FailureDataset("syn", {ds.records().begin(), ds.records().end()}));
}

TEST(CsConfig, DefaultsAreThePublishedSettings) {
  const CsConfig cfg;
  EXPECT_EQ(10u, cfg.n_nests);
  EXPECT_EQ(1u, cfg.n_cuckoos_per_gen);
  EXPECT_EQ(2u, cfg.eggs_per_nest);
  EXPECT_EQ(100u, cfg.max_generations);
  EXPECT_EQ(0.01, cfg.alpha);
  EXPECT_EQ(0.25, cfg.pa);
  EXPECT_EQ(1.5, cfg.levy_exponent);
  EXPECT_NO_THROW(cfg.check());
}

TEST(CsConfig, CheckRejectsInvalidSettings) {
  auto bad = [](auto mutate) {
    CsConfig c;
    mutate(c);
    return c;
  };
  EXPECT_THROW(bad([](CsConfig& c) { c.n_nests = 1; }).check(), ConfigError);
  EXPECT_THROW(bad([](CsConfig& c) { c.max_generations = 0; }).check(), ConfigError);
  EXPECT_THROW(bad([](CsConfig& c) { c.pa = 1.5; }).check(), ConfigError);
  EXPECT_THROW(bad([](CsConfig& c) { c.pa = -0.1; }).check(), ConfigError);
  EXPECT_THROW(bad([](CsConfig& c) { c.levy_exponent = 1.0; }).check(), ConfigError);
  EXPECT_THROW(bad([](CsConfig& c) { c.levy_exponent = 3.1; }).check(), ConfigError);
  EXPECT_THROW(bad([](CsConfig& c) { c.alpha = 0.0; }).check(), ConfigError);
  EXPECT_THROW(bad([](CsConfig& c) { c.eggs_per_nest = 3; }).check(), ConfigError);
  EXPECT_THROW(bad([](CsConfig& c) { c.n_cuckoos_per_gen = 0; }).check(), ConfigError);
}

TEST(CsConfig, AbandonmentCount) {
  CsConfig cfg;
  EXPECT_EQ(3u, cfg.abandoned_per_generation());  // ceil(2.5)
  cfg.pa = 0.0;
  EXPECT_EQ(0u, cfg.abandoned_per_generation());
  cfg.pa = 1.0;
  EXPECT_EQ(9u, cfg.abandoned_per_generation());
  cfg.pa = 0.2;
  EXPECT_EQ(2u, cfg.abandoned_per_generation());
  EXPECT_EQ(10u + 100u * 3u, cfg.expected_evaluations());
}

TEST(Levy, DeterministicPerSeed) {
  Rng a(5), b(5);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(levy_sample(a, 1.5), levy_sample(b, 1.5));
}

TEST(Levy, RejectsExponentOutsideRange) {
  EXPECT_THROW(LevyDistribution(1.0), ConfigError);
  EXPECT_THROW(LevyDistribution(3.5), ConfigError);
}

TEST(Levy, MantegnaScale) {
  // beta = 1: sigma_u = G(2) sin(pi/2) / (G(1) * 1 * 2^0) = 1.
  EXPECT_NEAR(1.0, LevyDistribution(2.0).sigma_u(), 1e-14);
  // beta = 0.5, reference value from an independent evaluation of the formula.
  const double beta = 0.5;
  const double num = std::tgamma(1.5) * std::sin(M_PI * beta / 2);
  const double den = std::tgamma(0.75) * beta * std::pow(2.0, -0.25);
  EXPECT_NEAR(std::pow(num / den, 2.0), LevyDistribution(1.5).sigma_u(), 1e-12);
}

TEST(Levy, TailIndexAndSymmetry) {
  for (double exponent : {1.5, 2.0}) {
    Rng rng(11);
    LevyDistribution levy(exponent);
    std::vector<double> draws(100000);
    for (double& d : draws) d = levy(rng);
    const double index = oracle::tail_index(draws);
    EXPECT_NEAR(exponent, index, 0.2) << "exponent " << exponent;
    const double iqr = quantile(draws, 0.75) - quantile(draws, 0.25);
    EXPECT_LT(std::abs(median(draws)), 0.05 * iqr);
  }
}

TEST(Levy, GaussianLimitAtExponentThree) {
  Rng rng(3);
  LevyDistribution levy(3.0);
  double sum_sq = 0.0;
  for (int i = 0; i < 20000; ++i) {
    const double s = levy(rng);
    ASSERT_TRUE(std::isfinite(s));
    sum_sq += s * s;
  }
  EXPECT_NEAR(2.0, sum_sq / 20000, 0.1);
}

TEST(Propose, ZeroStepsAreTheIdentity) {
  const Params x{123.0, 0.25};
  EXPECT_EQ(x, levy_move(x, 0.0, 0.0, default_bounds(), 0.01));
}

TEST(Propose, HugeStepsAreClamped) {
  const ParamBounds b = default_bounds();
  const double inf = std::numeric_limits<double>::infinity();
  EXPECT_EQ((Params{b.a_upper, b.b_lower}), levy_move({1, 0.5}, 1e300, -inf, b, 0.01));
}

TEST(Propose, StaysInBoundsAndHasTypicalScale) {
  const ParamBounds b = default_bounds();
  const Nest centre{{(b.a_lower + b.a_upper) / 2, (b.b_lower + b.b_upper) / 2}, 0.0};
  CsConfig cfg;
  Rng rng(17);
  std::vector<double> db;
  for (int i = 0; i < 10000; ++i) {
    const Params p = propose(rng, centre, b, cfg);
    ASSERT_TRUE(validate(p, b));
    db.push_back(std::abs(p.b - centre.params.b));
  }
  const double m = median(db);
  EXPECT_GE(m, 1e-4);
  EXPECT_LE(m, 1e-1);
}

TEST(StepScale, ProportionalWithWidthFloor) {
  EXPECT_DOUBLE_EQ(5.0 + 20.0, step_scale(5.0, 2000.0));
  EXPECT_DOUBLE_EQ(0.01, step_scale(0.0, 1.0));
}

TEST(InitPopulation, InBoundsDeterministicAndCounted) {
  const ParamBounds b = default_bounds();
  auto objective = [](const Params& p) { return p.a + p.b; };
  Rng r1(9), r2(9);
  std::size_t count = 0;
  const auto pop = init_population(r1, 10, b, objective, count);
  EXPECT_EQ(10u, count);
  ASSERT_EQ(10u, pop.size());
  for (const Nest& n : pop) {
    EXPECT_TRUE(validate(n.params, b));
    EXPECT_EQ(objective(n.params), n.fitness);
  }
  std::size_t count2 = 0;
  EXPECT_EQ(pop, init_population(r2, 10, b, objective, count2));
  EXPECT_THROW(init_population(r2, 1, b, objective, count2), ConfigError);
}

TEST(Step, NoAbandonmentWhenPaIsZero) {
  CsConfig cfg;
  cfg.pa = 0.0;
  CuckooSearch cs([](const Params& p) { return p.a; }, cfg, default_bounds());
  for (int g = 0; g < 20; ++g) {
    cs.step();
    EXPECT_TRUE(cs.last_step().abandoned.empty());
    EXPECT_EQ(10u, cs.nests().size());
  }
  EXPECT_EQ(10u + 20u, cs.trace().evaluation_count);
}

TEST(Step, AbandonsThreeWorstButNeverTheBest) {
  const Objective obj = model_objective(ModelKind::GoelOkumoto);
  CuckooSearch cs([&](const Params& p) { return obj.rmse(p); }, CsConfig{}, default_bounds());
  for (int g = 0; g < 50; ++g) {
    const double before = cs.best().fitness;
    cs.step();
    const auto& stats = cs.last_step();
    ASSERT_EQ(3u, stats.abandoned.size());
    for (const Params& p : stats.abandoned) EXPECT_NE(stats.protected_best, p);
    EXPECT_LE(cs.best().fitness, before);
    EXPECT_TRUE(std::is_sorted(cs.nests().begin(), cs.nests().end(),
                               [](const Nest& x, const Nest& y) { return x.fitness < y.fitness; }));
  }
}

TEST(Run, ConstantObjective) {
  CsConfig cfg;
  cfg.max_generations = 25;
  const FitOutcome out = run([](const Params&) { return 0.0; }, cfg, default_bounds());
  EXPECT_EQ(0.0, out.best.fitness);
  EXPECT_EQ(std::vector<double>(25, 0.0), out.trace.best_fitness_per_generation);
  EXPECT_EQ(cfg, out.config);
  EXPECT_EQ(default_bounds(), out.bounds);
}

TEST(Run, QuadraticBowlAgainstGrid) {
  auto bowl = [](const Params& p) {
    return (p.a - 500) * (p.a - 500) + (2000 * (p.b - 0.05)) * (2000 * (p.b - 0.05));
  };
  const ParamBounds b = default_bounds();
  const double centre = bowl({(b.a_lower + b.a_upper) / 2, (b.b_lower + b.b_upper) / 2});

  double grid_best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 200; ++i) {
    for (int j = 0; j < 200; ++j) {
      grid_best = std::min(grid_best, bowl({oracle::log_point(b.a_lower, b.a_upper, i, 200),
                                            oracle::log_point(b.b_lower, b.b_upper, j, 200)}));
    }
  }
  ASSERT_LT(grid_best, 0.01 * centre);

  double best = std::numeric_limits<double>::infinity();
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    CsConfig cfg;
    cfg.seed = seed;
    best = std::min(best, run(bowl, cfg, b).best.fitness);
  }
  EXPECT_LT(best, 0.01 * centre);
}

TEST(Run, InvariantsAcrossSeedsAndModels) {
  for (ModelKind kind : kAllModels) {
    const Objective obj = model_objective(kind);
    auto f = [&](const Params& p) { return obj.rmse(p); };
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      CsConfig cfg;
      cfg.seed = seed;
      CuckooSearch cs(f, cfg, default_bounds());
      for (std::size_t g = 0; g < cfg.max_generations; ++g) {
        cs.step();
        for (const Nest& n : cs.nests()) {
          ASSERT_TRUE(validate(n.params, default_bounds()));
          ASSERT_EQ(obj.rmse(n.params), n.fitness);
        }
      }
      const FitOutcome out = cs.outcome();
      const auto& trace = out.trace.best_fitness_per_generation;
      EXPECT_TRUE(std::is_sorted(trace.rbegin(), trace.rend()));
      EXPECT_EQ(trace.back(), out.best.fitness);
      EXPECT_EQ(cfg.expected_evaluations(), out.trace.evaluation_count);
      EXPECT_EQ(out, run(f, cfg, default_bounds()));
    }
  }
}

TEST(Run, FaultsAreWorstFitness) {
  int calls = 0;
  auto flaky = [&](const Params& p) {
    ++calls;
    if (calls % 3 == 0) throw EvaluationFault("boom");
    if (calls % 5 == 0) return std::numeric_limits<double>::quiet_NaN();
    return p.a;
  };
  const FitOutcome out = run(flaky, CsConfig{}, default_bounds());
  EXPECT_TRUE(std::isfinite(out.best.fitness));

  EXPECT_EQ(std::numeric_limits<double>::infinity(),
            evaluate_fitness([](const Params&) -> double { throw DomainError("x"); }, {1, 1}));
  EXPECT_THROW(run([](const Params&) { return std::numeric_limits<double>::infinity(); },
                   CsConfig{}, default_bounds()),
               EvaluationFault);
}

TEST(Run, ConfigErrorsBeforeAnyEvaluation) {
  int calls = 0;
  auto counting = [&](const Params&) { return double(++calls); };
  CsConfig cfg;
  cfg.pa = 2.0;
  EXPECT_THROW(run(counting, cfg, default_bounds()), ConfigError);
  EXPECT_THROW(run(counting, CsConfig{}, ParamBounds{2, 1, 0.1, 1}), ConfigError);
  EXPECT_EQ(0, calls);
}

}  // namespace
}  // namespace srgmcs
