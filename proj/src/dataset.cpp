#include "srgmcs/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <random>
#include <string_view>

#include "srgmcs/error.hpp"

namespace srgmcs {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_header(std::string_view line) {
  std::string key;
  for (char c : line) {
    if (!std::isspace(static_cast<unsigned char>(c))) {
      key += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
  }
  return key == "time,failures" || key == "time,cumulative_failures";
}

bool parse_real(std::string_view text, double& out) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  if (text.empty()) return false;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc() && ptr == text.data() + text.size() && std::isfinite(out);
}

// Checks record `i` against its predecessor; returns an empty string when fine.
std::string record_problem(std::span<const FailureRecord> records, std::size_t i) {
  const FailureRecord& r = records[i];
  if (!std::isfinite(r.time) || !std::isfinite(r.cumulative_failures)) return "non-finite value";
  if (r.time <= 0.0) return "time must be positive";
  if (r.cumulative_failures < 0.0) return "cumulative failures must be non-negative";
  if (i > 0) {
    if (!(r.time > records[i - 1].time)) return "time not strictly increasing";
    if (r.cumulative_failures < records[i - 1].cumulative_failures) {
      return "cumulative failures decrease";
    }
  }
  return {};
}

void check_order(std::span<const FailureRecord> records) {
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (auto why = record_problem(records, i); !why.empty()) {
      throw ValidationError(why + " at record " + std::to_string(i + 1));
    }
  }
}

}  // namespace

FailureDataset::FailureDataset(std::string name, std::vector<FailureRecord> records)
    : name_(std::move(name)), records_(std::move(records)) {
  if (records_.size() < kMinRecords) {
    throw ValidationError("dataset needs at least " + std::to_string(kMinRecords) +
                          " records, got " + std::to_string(records_.size()));
  }
  check_order(records_);
}

FailureDataset FailureDataset::ordered(std::string name, std::vector<FailureRecord> records) {
  check_order(records);
  return FailureDataset(Unchecked{}, std::move(name), std::move(records));
}

FailureDataset FailureDataset::slice(std::size_t first, std::size_t last) const {
  last = std::min(last, records_.size());
  first = std::min(first, last);
  return FailureDataset(Unchecked{}, name_,
                        std::vector<FailureRecord>(records_.begin() + first,
                                                   records_.begin() + last));
}

void SplitSpec::check() const {
  if (!(train_fraction >= 0.5 && train_fraction <= 1.0)) {
    throw ConfigError("train fraction must lie in [0.5, 1.0], got " +
                      std::to_string(train_fraction));
  }
}

FailureDataset load(std::istream& source, std::string name) {
  std::vector<FailureRecord> records;
  std::string raw;
  std::size_t line_no = 0;
  bool seen_content = false;
  while (std::getline(source, raw)) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line_no == 1 && line.starts_with("\xEF\xBB\xBF")) line = trim(line.substr(3));
    if (line.empty() || line.front() == '#') continue;
    if (!seen_content) {
      seen_content = true;
      if (is_header(line)) continue;
    }
    const auto comma = line.find(',');
    if (comma == std::string_view::npos || line.find(',', comma + 1) != std::string_view::npos) {
      throw ParseError("expected two comma-separated columns", line_no);
    }
    FailureRecord r;
    if (!parse_real(line.substr(0, comma), r.time)) {
      throw ParseError("malformed time value", line_no);
    }
    if (!parse_real(line.substr(comma + 1), r.cumulative_failures)) {
      throw ParseError("malformed cumulative failure value", line_no);
    }
    records.push_back(r);
    if (auto why = record_problem(records, records.size() - 1); !why.empty()) {
      throw ValidationError(why, line_no);
    }
  }
  if (records.size() < FailureDataset::kMinRecords) {
    throw ValidationError("fewer than " + std::to_string(FailureDataset::kMinRecords) +
                          " records (found " + std::to_string(records.size()) + ")");
  }
  return FailureDataset(std::move(name), std::move(records));
}

FailureDataset load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open data file '" + path + "'", 0);
  std::string name = path;
  if (auto slash = name.find_last_of("/\\"); slash != std::string::npos) name.erase(0, slash + 1);
  if (auto dot = name.find_last_of('.'); dot != std::string::npos && dot > 0) name.erase(dot);
  return load(in, name);
}

void save(std::ostream& out, const FailureDataset& ds) {
  const auto old_precision = out.precision(std::numeric_limits<double>::max_digits10);
  out << "time,failures\n";
  for (const auto& r : ds.records()) out << r.time << ',' << r.cumulative_failures << '\n';
  out.precision(old_precision);
}

std::size_t train_count(std::size_t n, double train_fraction) {
  if (n < FailureDataset::kMinRecords) {
    throw ValidationError("cannot split a dataset of fewer than 3 records");
  }
  // The slack absorbs binary error in decimal fractions, e.g. 0.7 * 25.
  const double exact = train_fraction * static_cast<double>(n);
  const auto rounded = static_cast<std::size_t>(std::floor(exact + 0.5 + 1e-9 * exact));
  return std::clamp(rounded, FailureDataset::kMinRecords, n);
}

std::pair<FailureDataset, FailureDataset> split(const FailureDataset& ds, SplitSpec spec) {
  spec.check();
  const std::size_t n_train = train_count(ds.size(), spec.train_fraction);
  return {ds.slice(0, n_train), ds.slice(n_train, ds.size())};
}

FailureDataset generate(ModelKind kind, const Params& p, std::span<const double> times,
                        double noise_sd, std::uint64_t seed, std::string name) {
  if (!(noise_sd >= 0.0) || !std::isfinite(noise_sd)) {
    throw DomainError("noise standard deviation must be finite and >= 0");
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> noise(0.0, noise_sd > 0.0 ? noise_sd : 1.0);

  std::vector<FailureRecord> records;
  records.reserve(times.size());
  double running = 0.0;
  for (double t : times) {
    double value = mean_value(kind, p, t);
    if (noise_sd > 0.0) value = std::max(value + noise(rng), 0.0);
    running = std::max(running, value);
    records.push_back({t, running});
  }
  return FailureDataset::ordered(std::move(name), std::move(records));
}

std::vector<double> time_grid(double start, double stop, double step) {
  if (!(step > 0.0) || !(start > 0.0) || !(stop >= start)) {
    throw DomainError("time grid needs 0 < start <= stop and step > 0");
  }
  const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
  std::vector<double> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = start + static_cast<double>(i) * step;
  return out;
}

}  // namespace srgmcs
