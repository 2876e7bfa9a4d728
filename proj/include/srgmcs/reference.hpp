#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>

#include "srgmcs/model.hpp"

namespace srgmcs {

/// Published RMSE of other optimizers (and of a reference Cuckoo Search run)
/// on the classic benchmark datasets. Used only for side-by-side output.
struct ReferenceValue {
  std::string_view dataset;    // data1..data3, project2..project4
  ModelKind model;
  std::string_view algorithm;  // PSO, ACO, Ex-ACO, CS
  std::string_view phase;      // train or test
  double train_fraction;       // split the value was obtained with
  double rmse;
};

std::span<const ReferenceValue> reference_values();

/// Values for one (dataset, model) pair keyed "<algorithm>.<phase>". The
/// dataset match is case-insensitive; unknown datasets yield an empty map.
std::map<std::string, double> references_for(std::string_view dataset, ModelKind model);

}  // namespace srgmcs
