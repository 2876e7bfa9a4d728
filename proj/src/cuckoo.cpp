#include "srgmcs/cuckoo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

#include "srgmcs/error.hpp"

namespace srgmcs {

namespace {

constexpr double kWorst = std::numeric_limits<double>::infinity();

Params uniform_point(Rng& rng, const ParamBounds& bounds) {
  std::uniform_real_distribution<double> ua(bounds.a_lower, bounds.a_upper);
  std::uniform_real_distribution<double> ub(bounds.b_lower, bounds.b_upper);
  Params p;
  p.a = ua(rng);
  p.b = ub(rng);
  return p;
}

std::size_t pick_index(Rng& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

}  // namespace

void CsConfig::check() const {
  if (n_nests < 2) throw ConfigError("n_nests must be >= 2");
  if (n_cuckoos_per_gen < 1) throw ConfigError("n_cuckoos_per_gen must be >= 1");
  if (eggs_per_nest != 2) {
    throw ConfigError("eggs_per_nest is the solution dimension (a, b) and must be 2");
  }
  if (max_generations < 1) throw ConfigError("max_generations must be >= 1");
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw ConfigError("alpha must be > 0");
  if (!(pa >= 0.0 && pa <= 1.0)) throw ConfigError("pa must lie in [0, 1]");
  if (!(levy_exponent > 1.0 && levy_exponent <= 3.0)) {
    throw ConfigError("levy_exponent must lie in (1, 3]");
  }
}

std::size_t CsConfig::abandoned_per_generation() const {
  const auto k = static_cast<std::size_t>(std::ceil(pa * static_cast<double>(n_nests) - 1e-12));
  return std::min(k, n_nests - 1);
}

std::size_t CsConfig::expected_evaluations() const {
  return n_nests + max_generations * (n_cuckoos_per_gen + abandoned_per_generation());
}

LevyDistribution::LevyDistribution(double exponent) : exponent_(exponent) {
  if (!(exponent > 1.0 && exponent <= 3.0)) {
    throw ConfigError("Levy exponent must lie in (1, 3], got " + std::to_string(exponent));
  }
  beta_ = exponent - 1.0;
  if (beta_ < 2.0) {
    const double num = std::tgamma(1.0 + beta_) * std::sin(std::numbers::pi * beta_ / 2.0);
    const double den =
        std::tgamma((1.0 + beta_) / 2.0) * beta_ * std::pow(2.0, (beta_ - 1.0) / 2.0);
    sigma_u_ = std::pow(num / den, 1.0 / beta_);
  } else {
    sigma_u_ = std::numbers::sqrt2;
  }
}

double LevyDistribution::operator()(Rng& rng) {
  const double u = normal_(rng) * sigma_u_;
  if (beta_ >= 2.0) return u;
  const double v = normal_(rng);
  const double step = u / std::pow(std::abs(v), 1.0 / beta_);
  if (std::isnan(step)) return 0.0;
  constexpr double kMax = std::numeric_limits<double>::max();
  return std::clamp(step, -kMax, kMax);
}

double levy_sample(Rng& rng, double exponent) { return LevyDistribution(exponent)(rng); }

double step_scale(double x, double width) { return std::abs(x) + kWidthFloor * width; }

Params levy_move(const Params& from, double step_a, double step_b, const ParamBounds& bounds,
                 double alpha) {
  Params out;
  out.a = from.a + alpha * step_a * step_scale(from.a, bounds.a_width());
  out.b = from.b + alpha * step_b * step_scale(from.b, bounds.b_width());
  out.a = std::clamp(out.a, bounds.a_lower, bounds.a_upper);
  out.b = std::clamp(out.b, bounds.b_lower, bounds.b_upper);
  return out;
}

Params propose(Rng& rng, const Nest& from, const ParamBounds& bounds, const CsConfig& cfg) {
  LevyDistribution levy(cfg.levy_exponent);
  const double sa = levy(rng);
  const double sb = levy(rng);
  return levy_move(from.params, sa, sb, bounds, cfg.alpha);
}

double evaluate_fitness(const ObjectiveFn& objective, const Params& p) {
  double value = kWorst;
  try {
    value = objective(p);
  } catch (const Error&) {
    return kWorst;
  }
  return std::isfinite(value) ? value : kWorst;
}

std::vector<Nest> init_population(Rng& rng, std::size_t n, const ParamBounds& bounds,
                                  const ObjectiveFn& objective, std::size_t& evaluation_count) {
  if (n < 2) throw ConfigError("population needs at least 2 nests");
  std::vector<Nest> nests;
  nests.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Params p = uniform_point(rng, bounds);
    nests.push_back({p, evaluate_fitness(objective, p)});
  }
  evaluation_count += n;
  return nests;
}

CuckooSearch::CuckooSearch(ObjectiveFn objective, CsConfig cfg, ParamBounds bounds)
    : objective_(std::move(objective)),
      cfg_((cfg.check(), cfg)),
      bounds_((bounds.check(), bounds)),
      rng_(cfg.seed),
      levy_(cfg.levy_exponent) {
  if (!objective_) throw ConfigError("objective is empty");
  nests_ = init_population(rng_, cfg_.n_nests, bounds_, objective_, trace_.evaluation_count);
  rank();
}

Nest CuckooSearch::make_nest(const Params& p) {
  ++trace_.evaluation_count;
  return {p, evaluate_fitness(objective_, p)};
}

void CuckooSearch::rank() {
  std::stable_sort(nests_.begin(), nests_.end(),
                   [](const Nest& x, const Nest& y) { return x.fitness < y.fitness; });
}

void CuckooSearch::step() {
  last_ = StepStats{};
  const std::size_t n = nests_.size();

  for (std::size_t c = 0; c < cfg_.n_cuckoos_per_gen; ++c) {
    const Nest& source = nests_[pick_index(rng_, n)];
    const double sa = levy_(rng_);
    const double sb = levy_(rng_);
    Nest cuckoo = make_nest(levy_move(source.params, sa, sb, bounds_, cfg_.alpha));
    Nest& host = nests_[pick_index(rng_, n)];
    if (cuckoo.fitness < host.fitness) {
      host = cuckoo;
      ++last_.cuckoos_accepted;
    }
  }

  // Rank, keep position 0 (the global best), rebuild the worst k.
  rank();
  last_.protected_best = nests_.front().params;
  const std::size_t k = cfg_.abandoned_per_generation();
  for (std::size_t i = n - k; i < n; ++i) {
    last_.abandoned.push_back(nests_[i].params);
    nests_[i] = make_nest(uniform_point(rng_, bounds_));
  }

  rank();
  trace_.best_fitness_per_generation.push_back(nests_.front().fitness);
}

FitOutcome CuckooSearch::outcome() const {
  if (!std::isfinite(best().fitness)) {
    throw EvaluationFault("no nest produced a finite fitness");
  }
  return {best(), trace_, cfg_, bounds_};
}

FitOutcome run(ObjectiveFn objective, const CsConfig& cfg, const ParamBounds& bounds) {
  CuckooSearch search(std::move(objective), cfg, bounds);
  for (std::size_t g = 0; g < cfg.max_generations; ++g) search.step();
  return search.outcome();
}

}  // namespace srgmcs
