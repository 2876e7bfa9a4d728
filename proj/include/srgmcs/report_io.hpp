#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "srgmcs/harness.hpp"

namespace srgmcs {

enum class Format { Json, Csv };

std::optional<Format> parse_format(std::string_view text);

/// Fixed CSV header shared by every report type.
inline constexpr std::string_view kCsvHeader =
    "model,dataset,train_fraction,seed,a,b,train_rmse,test_rmse";

/// JSON object per report with stable keys:
///   model, dataset, train_fraction, seed, params{a,b}, train_rmse,
///   test_rmse (null when absent), config{...}, bounds{...},
///   engine{generations,evaluations},
///   aggregate{n_seeds,base_seed,mean_train_rmse,sd_train_rmse},
/// plus `references` and `timestamp` when set. CSV is kCsvHeader and one row.
std::string emit(const FitReport& report, Format format);

/// JSON array of reports, or CSV with one row per report.
std::string emit(const std::vector<FitReport>& reports, Format format);

/// JSON {model, dataset, rows:[{train_fraction, seed, params, train_rmse,
/// test_rmse}]}; CSV one row per fraction.
std::string emit(const SplitStudyReport& report, Format format);

/// Cells in row-major (dataset, model) order, as emit(vector<FitReport>).
std::string emit(const CompareReport& report, Format format);

/// Whitespace-separated `model value_group value` rows for one dataset of a
/// comparison: the fitted RMSE under group "CS" followed by any attached
/// reference values (training phase) under their algorithm names.
std::string emit_plot_data(const CompareReport& report, std::size_t dataset_index);

/// Inverse of emit(FitReport, Json). Throws ParseError on malformed input.
FitReport parse_fit_report(std::string_view json);
std::vector<FitReport> parse_fit_reports(std::string_view json);
SplitStudyReport parse_split_study(std::string_view json);

}  // namespace srgmcs
