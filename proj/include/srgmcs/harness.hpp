#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "srgmcs/cuckoo.hpp"
#include "srgmcs/dataset.hpp"
#include "srgmcs/model.hpp"

namespace srgmcs {

struct EngineStats {
  std::size_t generations = 0;
  std::size_t evaluations = 0;

  friend bool operator==(const EngineStats&, const EngineStats&) = default;
};

/// Spread of the training RMSE over the seeds of a best-of-n fit.
struct AggregateStats {
  std::size_t n_seeds = 1;
  std::uint64_t base_seed = 0;
  double mean_train_rmse = 0.0;
  double sd_train_rmse = 0.0;  // sample standard deviation; 0 for a single seed

  friend bool operator==(const AggregateStats&, const AggregateStats&) = default;
};

/// Result of fitting one model to one dataset. For best-of-n fits, `seed`,
/// `config.seed` and every per-run field describe the winning run.
struct FitReport {
  ModelKind model = ModelKind::GoelOkumoto;
  std::string dataset_name;
  SplitSpec split;
  double train_rmse = 0.0;
  std::optional<double> test_rmse;  // absent when nothing is held out
  Params params;
  std::uint64_t seed = 0;
  CsConfig config;
  ParamBounds bounds = default_bounds();
  EngineStats engine;
  AggregateStats aggregate;
  std::map<std::string, double> references;  // optional side-by-side values
  std::optional<std::string> timestamp;

  friend bool operator==(const FitReport&, const FitReport&) = default;
};

struct SplitStudyRow {
  double train_fraction = 0.0;
  double train_rmse = 0.0;
  std::optional<double> test_rmse;
  Params params;
  std::uint64_t seed = 0;

  friend bool operator==(const SplitStudyRow&, const SplitStudyRow&) = default;
};

struct SplitStudyReport {
  ModelKind model = ModelKind::GoelOkumoto;
  std::string dataset_name;
  std::vector<SplitStudyRow> rows;  // descending train_fraction

  friend bool operator==(const SplitStudyReport&, const SplitStudyReport&) = default;
};

/// Model x dataset grid of full-training fits, cells row-major by
/// (dataset, model): cell index = dataset_index * models.size() + model_index.
struct CompareReport {
  std::vector<std::string> datasets;
  std::vector<ModelKind> models;
  std::vector<FitReport> cells;

  const FitReport& at(std::size_t dataset_index, std::size_t model_index) const {
    return cells.at(dataset_index * models.size() + model_index);
  }

  friend bool operator==(const CompareReport&, const CompareReport&) = default;
};

/// 0.9, 0.8, 0.7, 0.6, 0.5
std::vector<double> default_fractions();

/// Splits `ds`, runs the cuckoo search on the training part only and scores
/// the best parameters on the held-out part. With n_seeds > 1 the runs use
/// seeds cfg.seed, cfg.seed + 1, ... and the lowest training RMSE wins
/// (ties go to the lower seed).
FitReport fit(ModelKind kind, const FailureDataset& ds, SplitSpec split, const CsConfig& cfg,
              std::size_t n_seeds = 1, const ParamBounds& bounds = default_bounds());

/// fit() with train_fraction = 1.
FitReport train_full(ModelKind kind, const FailureDataset& ds, const CsConfig& cfg,
                     std::size_t n_seeds = 1, const ParamBounds& bounds = default_bounds());

/// One best-of-n fit per fraction, every row starting from cfg.seed. Rows are
/// sorted by descending fraction. Fractions must be distinct and valid.
SplitStudyReport split_study(ModelKind kind, const FailureDataset& ds,
                             std::span<const double> fractions, const CsConfig& cfg,
                             std::size_t n_seeds = 1,
                             const ParamBounds& bounds = default_bounds());

/// train_full for every (dataset, model) pair; cell i uses seed cfg.seed + i.
CompareReport compare(std::span<const ModelKind> kinds, std::span<const FailureDataset> datasets,
                      const CsConfig& cfg, std::size_t n_seeds = 1,
                      const ParamBounds& bounds = default_bounds());

/// Runs fn(0), ..., fn(n - 1) on up to `threads` workers (0 = hardware
/// concurrency). fn must write only to its own index.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn,
                  std::size_t threads = 0);

}  // namespace srgmcs
