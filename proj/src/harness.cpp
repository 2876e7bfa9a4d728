#include "srgmcs/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "srgmcs/error.hpp"
#include "srgmcs/objective.hpp"

namespace srgmcs {

namespace {

struct SeedRun {
  FitOutcome outcome;
  std::uint64_t seed = 0;
};

}  // namespace

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn,
                  std::size_t threads) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, n);
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> workers;
    workers.reserve(threads);
    for (std::size_t w = 0; w < threads; ++w) {
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < n; i = next++) {
          try {
            fn(i);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

std::vector<double> default_fractions() { return {0.9, 0.8, 0.7, 0.6, 0.5}; }

FitReport fit(ModelKind kind, const FailureDataset& ds, SplitSpec split_spec, const CsConfig& cfg,
              std::size_t n_seeds, const ParamBounds& bounds) {
  cfg.check();
  bounds.check();
  split_spec.check();
  if (n_seeds < 1) throw ConfigError("n_seeds must be >= 1");

  auto [train, test] = split(ds, split_spec);
  const Objective objective(kind, std::move(train));

  std::vector<SeedRun> runs(n_seeds);
  parallel_for(n_seeds, [&](std::size_t k) {
    CsConfig seeded = cfg;
    seeded.seed = cfg.seed + k;
    runs[k] = {run([&objective](const Params& p) { return objective.rmse(p); }, seeded, bounds),
               seeded.seed};
  });

  std::size_t winner = 0;
  double sum = 0.0;
  for (std::size_t k = 0; k < n_seeds; ++k) {
    sum += runs[k].outcome.best.fitness;
    if (runs[k].outcome.best.fitness < runs[winner].outcome.best.fitness) winner = k;
  }
  const double mean = sum / static_cast<double>(n_seeds);
  double ss = 0.0;
  for (const auto& r : runs) ss += (r.outcome.best.fitness - mean) * (r.outcome.best.fitness - mean);

  const FitOutcome& best = runs[winner].outcome;
  FitReport report;
  report.model = kind;
  report.dataset_name = ds.name();
  report.split = split_spec;
  report.train_rmse = best.best.fitness;
  if (!test.empty()) report.test_rmse = evaluate_on(kind, best.best.params, test);
  report.params = best.best.params;
  report.seed = runs[winner].seed;
  report.config = best.config;
  report.bounds = best.bounds;
  report.engine = {best.trace.best_fitness_per_generation.size(), best.trace.evaluation_count};
  report.aggregate.n_seeds = n_seeds;
  report.aggregate.base_seed = cfg.seed;
  report.aggregate.mean_train_rmse = mean;
  report.aggregate.sd_train_rmse =
      n_seeds > 1 ? std::sqrt(ss / static_cast<double>(n_seeds - 1)) : 0.0;
  return report;
}

FitReport train_full(ModelKind kind, const FailureDataset& ds, const CsConfig& cfg,
                     std::size_t n_seeds, const ParamBounds& bounds) {
  return fit(kind, ds, SplitSpec{1.0}, cfg, n_seeds, bounds);
}

SplitStudyReport split_study(ModelKind kind, const FailureDataset& ds,
                             std::span<const double> fractions, const CsConfig& cfg,
                             std::size_t n_seeds, const ParamBounds& bounds) {
  if (fractions.empty()) throw ConfigError("split study needs at least one fraction");
  std::vector<double> ordered(fractions.begin(), fractions.end());
  for (double f : ordered) SplitSpec{f}.check();
  std::sort(ordered.begin(), ordered.end(), std::greater<>());
  if (std::adjacent_find(ordered.begin(), ordered.end()) != ordered.end()) {
    throw ConfigError("split study fractions must be distinct");
  }

  SplitStudyReport report;
  report.model = kind;
  report.dataset_name = ds.name();
  report.rows.reserve(ordered.size());
  for (double f : ordered) {
    const FitReport r = fit(kind, ds, SplitSpec{f}, cfg, n_seeds, bounds);
    report.rows.push_back({f, r.train_rmse, r.test_rmse, r.params, r.seed});
  }
  return report;
}

CompareReport compare(std::span<const ModelKind> kinds, std::span<const FailureDataset> datasets,
                      const CsConfig& cfg, std::size_t n_seeds, const ParamBounds& bounds) {
  if (kinds.empty() || datasets.empty()) {
    throw ConfigError("compare needs at least one model and one dataset");
  }
  CompareReport report;
  report.models.assign(kinds.begin(), kinds.end());
  for (const auto& ds : datasets) report.datasets.push_back(ds.name());

  const std::size_t n_cells = kinds.size() * datasets.size();
  report.cells.resize(n_cells);
  // Seeds of one cell already run in parallel inside fit().
  for (std::size_t cell = 0; cell < n_cells; ++cell) {
    CsConfig seeded = cfg;
    seeded.seed = cfg.seed + cell;
    report.cells[cell] = train_full(kinds[cell % kinds.size()], datasets[cell / kinds.size()],
                                    seeded, n_seeds, bounds);
  }
  return report;
}

}  // namespace srgmcs
