#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <vector>

#include "srgmcs/model.hpp"

namespace srgmcs {

using Rng = std::mt19937_64;

/// Fitness to minimize. Non-finite results and thrown srgmcs::Error are
/// treated as the worst possible fitness by the engine.
using ObjectiveFn = std::function<double(const Params&)>;

/// Cuckoo Search settings. Defaults are the published settings, with
/// Levy exponent 1.5.
struct CsConfig {
  std::size_t n_nests = 10;
  std::size_t n_cuckoos_per_gen = 1;
  std::size_t eggs_per_nest = 2;  // solution dimensionality (a, b); only 2 is supported
  std::size_t max_generations = 100;
  double alpha = 0.01;
  double pa = 0.25;
  double levy_exponent = 1.5;
  std::uint64_t seed = 0;

  /// Throws ConfigError when an invariant is violated.
  void check() const;

  /// ceil(pa * n_nests), capped at n_nests - 1 so the best nest survives.
  std::size_t abandoned_per_generation() const;

  /// Objective calls made by a complete run.
  std::size_t expected_evaluations() const;

  friend bool operator==(const CsConfig&, const CsConfig&) = default;
};

struct Nest {
  Params params;
  double fitness = 0.0;  // objective at params; lower is better

  friend bool operator==(const Nest&, const Nest&) = default;
};

struct RunTrace {
  std::vector<double> best_fitness_per_generation;
  std::size_t evaluation_count = 0;

  friend bool operator==(const RunTrace&, const RunTrace&) = default;
};

struct FitOutcome {
  Nest best;
  RunTrace trace;
  CsConfig config;
  ParamBounds bounds;

  friend bool operator==(const FitOutcome&, const FitOutcome&) = default;
};

/// Symmetric heavy-tailed steps whose density decays like |s|^{-exponent},
/// 1 < exponent <= 3, drawn with Mantegna's algorithm:
///   s = u / |v|^{1/beta},  beta = exponent - 1,
///   u ~ N(0, sigma_u^2),  v ~ N(0, 1),
///   sigma_u = [G(1+beta) sin(pi beta / 2) / (G((1+beta)/2) beta 2^{(beta-1)/2})]^{1/beta}.
/// At exponent 3 (beta = 2) the stable law is Gaussian and a N(0, 2) draw is returned.
class LevyDistribution {
 public:
  explicit LevyDistribution(double exponent);

  double exponent() const noexcept { return exponent_; }
  double sigma_u() const noexcept { return sigma_u_; }

  double operator()(Rng& rng);

 private:
  double exponent_;
  double beta_;
  double sigma_u_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

double levy_sample(Rng& rng, double exponent);

/// Fraction of the bound width added to |x| in the per-dimension step scale.
inline constexpr double kWidthFloor = 0.01;

/// Per-dimension step scale |x| + kWidthFloor * width. Proportional to the
/// coordinate so that a single alpha suits parameters spanning many decades;
/// the width term keeps coordinates near zero mobile.
double step_scale(double x, double width);

/// Levy-flight move from `from`: x + alpha * s * step_scale(x, width) per
/// dimension with s an independent Levy draw, clamped to bounds.
Params propose(Rng& rng, const Nest& from, const ParamBounds& bounds, const CsConfig& cfg);

/// Same move with explicit step draws (s_a, s_b); exposed for testing.
Params levy_move(const Params& from, double step_a, double step_b, const ParamBounds& bounds,
                 double alpha);

/// Evaluates `objective`, mapping faults and non-finite values to +infinity.
double evaluate_fitness(const ObjectiveFn& objective, const Params& p);

/// n nests drawn uniformly inside bounds and evaluated; adds n to evaluation_count.
std::vector<Nest> init_population(Rng& rng, std::size_t n, const ParamBounds& bounds,
                                  const ObjectiveFn& objective, std::size_t& evaluation_count);

/// Bookkeeping for the most recent generation.
struct StepStats {
  std::size_t cuckoos_accepted = 0;
  std::vector<Params> abandoned;  // params of the nests that were discarded
  Params protected_best;          // the global best spared from abandonment
};

/// One Cuckoo Search run in progress. The population is kept ranked, best first.
class CuckooSearch {
 public:
  /// Validates configuration and bounds, then draws and evaluates the initial population.
  CuckooSearch(ObjectiveFn objective, CsConfig cfg, ParamBounds bounds);

  /// One generation: Levy cuckoos with random-nest replacement, abandonment
  /// of the worst nests except the best, then ranking.
  void step();

  std::span<const Nest> nests() const noexcept { return nests_; }
  const Nest& best() const noexcept { return nests_.front(); }
  const RunTrace& trace() const noexcept { return trace_; }
  const StepStats& last_step() const noexcept { return last_; }
  std::size_t generation() const noexcept { return trace_.best_fitness_per_generation.size(); }
  const CsConfig& config() const noexcept { return cfg_; }
  const ParamBounds& bounds() const noexcept { return bounds_; }

  /// Throws EvaluationFault when no finite fitness was ever found.
  FitOutcome outcome() const;

 private:
  void rank();
  Nest make_nest(const Params& p);

  ObjectiveFn objective_;
  CsConfig cfg_;
  ParamBounds bounds_;
  Rng rng_;
  LevyDistribution levy_;
  std::vector<Nest> nests_;
  RunTrace trace_;
  StepStats last_;
};

/// init_population followed by exactly cfg.max_generations steps.
FitOutcome run(ObjectiveFn objective, const CsConfig& cfg, const ParamBounds& bounds);

}  // namespace srgmcs
