#include "srgmcs/objective.hpp"

#include <cmath>

#include "srgmcs/error.hpp"

namespace srgmcs {

double rmse(ModelKind kind, const Params& p, std::span<const FailureRecord> records) {
  if (records.empty()) throw DomainError("RMSE of an empty dataset is undefined");
  double sum_sq = 0.0;
  for (const auto& r : records) {
    const double err = r.cumulative_failures - mean_value(kind, p, r.time);
    sum_sq += err * err;
  }
  const double value = std::sqrt(sum_sq / static_cast<double>(records.size()));
  if (!std::isfinite(value)) throw EvaluationFault("RMSE accumulation overflowed");
  return value;
}

double evaluate_on(ModelKind kind, const Params& p, const FailureDataset& eval_data) {
  return rmse(kind, p, eval_data.records());
}

}  // namespace srgmcs
