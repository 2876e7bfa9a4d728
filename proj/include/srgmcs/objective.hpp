#pragma once

#include <span>

#include "srgmcs/dataset.hpp"
#include "srgmcs/model.hpp"

namespace srgmcs {

/// Root mean square error between observed cumulative failures and
/// mean_value predictions. Throws DomainError on an empty record set or
/// invalid params, EvaluationFault if the sum overflows.
double rmse(ModelKind kind, const Params& p, std::span<const FailureRecord> records);

/// RMSE fitness of one model against one (training) dataset.
class Objective {
 public:
  Objective(ModelKind kind, FailureDataset data) : kind_(kind), data_(std::move(data)) {}

  ModelKind kind() const noexcept { return kind_; }
  const FailureDataset& data() const noexcept { return data_; }

  double rmse(const Params& p) const { return srgmcs::rmse(kind_, p, data_.records()); }
  double operator()(const Params& p) const { return rmse(p); }

 private:
  ModelKind kind_;
  FailureDataset data_;
};

/// Same measure on held-out data; the optimizer never sees this value.
double evaluate_on(ModelKind kind, const Params& p, const FailureDataset& eval_data);

}  // namespace srgmcs
