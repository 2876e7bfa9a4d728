#pragma once

#include <cstdint>
#include <istream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "srgmcs/model.hpp"

namespace srgmcs {

struct FailureRecord {
  double time = 0.0;                 // elapsed test time, > 0
  double cumulative_failures = 0.0;  // >= 0, real to allow grouped data

  friend bool operator==(const FailureRecord&, const FailureRecord&) = default;
};

/// Ordered cumulative-failure observations. Construction validates:
/// at least 3 records, strictly increasing time, non-decreasing failures.
/// Immutable afterwards.
class FailureDataset {
 public:
  static constexpr std::size_t kMinRecords = 3;

  FailureDataset(std::string name, std::vector<FailureRecord> records);

  const std::string& name() const noexcept { return name_; }
  std::span<const FailureRecord> records() const noexcept { return records_; }
  std::size_t size() const noexcept { return records_.size(); }
  bool empty() const noexcept { return records_.empty(); }
  const FailureRecord& operator[](std::size_t i) const { return records_[i]; }

  /// Checks ordering and value ranges but not the minimum size; used for
  /// synthetic data and test suffixes.
  static FailureDataset ordered(std::string name, std::vector<FailureRecord> records);

  /// Records [first, last) as a dataset of the same name. Slices keep the
  /// ordering invariants but may hold fewer than kMinRecords records.
  FailureDataset slice(std::size_t first, std::size_t last) const;

  friend bool operator==(const FailureDataset&, const FailureDataset&) = default;

 private:
  struct Unchecked {};
  FailureDataset(Unchecked, std::string name, std::vector<FailureRecord> records)
      : name_(std::move(name)), records_(std::move(records)) {}

  std::string name_;
  std::vector<FailureRecord> records_;
};

/// Fraction of records, taken chronologically from the start, used for training.
struct SplitSpec {
  double train_fraction = 1.0;

  /// Throws ConfigError unless 0.5 <= train_fraction <= 1.
  void check() const;

  friend bool operator==(const SplitSpec&, const SplitSpec&) = default;
};

/// Reads the two-column `time,cumulative_failures` text format. An optional
/// `time,failures` header and `#` comment lines are skipped; blank lines are
/// ignored; CRLF is accepted. Throws ParseError or ValidationError, both
/// carrying the 1-based source line.
FailureDataset load(std::istream& source, std::string name = "data");
FailureDataset load_file(const std::string& path);

/// Writes the format read by load(), with header.
void save(std::ostream& out, const FailureDataset& ds);

/// Number of training records: round-half-up of fraction * n, clamped to [3, n].
std::size_t train_count(std::size_t n, double train_fraction);

/// Chronological prefix/suffix split. The test part may be empty (fraction
/// 1.0) or shorter than three records, so it is returned without the usual
/// minimum-size check; all other invariants hold by construction.
std::pair<FailureDataset, FailureDataset> split(const FailureDataset& ds, SplitSpec spec);

/// Synthetic data: record i holds max_{j<=i}(mu(t_j) + eps_j) floored at 0,
/// eps_j ~ N(0, noise_sd^2) from a generator seeded with `seed`.
FailureDataset generate(ModelKind kind, const Params& p, std::span<const double> times,
                        double noise_sd, std::uint64_t seed, std::string name = "synthetic");

/// Convenience for evenly spaced times start, start+step, ..., <= stop.
std::vector<double> time_grid(double start, double stop, double step = 1.0);

}  // namespace srgmcs
