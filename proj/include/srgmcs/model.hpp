#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace srgmcs {

/// The four software reliability growth models.
enum class ModelKind {
  GoelOkumoto,        // a(1 - e^{-bt})
  Power,              // a t^b
  DelayedSShaped,     // a(1 - (1 + bt) e^{-bt})
  MusaOkumoto,        // a ln(1 + bt)
};

inline constexpr std::array<ModelKind, 4> kAllModels = {
    ModelKind::GoelOkumoto, ModelKind::Power, ModelKind::DelayedSShaped,
    ModelKind::MusaOkumoto};

/// Short lowercase code used on the command line and in reports: go, pow, dss, mo.
std::string_view model_code(ModelKind kind) noexcept;

/// Label as printed in comparison tables: G-O, POW, DSS, M-O.
std::string_view model_label(ModelKind kind) noexcept;

/// Case-insensitive lookup by code; also accepts the table labels.
std::optional<ModelKind> parse_model(std::string_view text);

/// Comma-separated list of valid codes, for error messages.
std::string model_code_list();

/// A point (a, b) in the two-dimensional search space.
struct Params {
  double a = 0.0;  // scale: total expected failures for finite-failure models
  double b = 0.0;  // rate (GO, DSS, MO) or exponent (POW)

  friend bool operator==(const Params&, const Params&) = default;
};

/// Closed box [a_lower, a_upper] x [b_lower, b_upper].
struct ParamBounds {
  double a_lower = 0.0;
  double a_upper = 0.0;
  double b_lower = 0.0;
  double b_upper = 0.0;

  double a_width() const noexcept { return a_upper - a_lower; }
  double b_width() const noexcept { return b_upper - b_lower; }

  /// Throws ConfigError unless lower < upper and everything is positive and finite.
  void check() const;

  friend bool operator==(const ParamBounds&, const ParamBounds&) = default;
};

/// a in [1e-5, 2000], b in [1e-5, 1].
ParamBounds default_bounds() noexcept;

struct Validation {
  bool accepted = true;
  std::string reason;  // empty when accepted

  explicit operator bool() const noexcept { return accepted; }
};

Validation validate(const Params& p, const ParamBounds& bounds);

/// Expected cumulative failures by time t. Throws DomainError on t < 0,
/// a <= 0, b <= 0 or non-finite input; EvaluationFault if the result overflows.
double mean_value(ModelKind kind, const Params& p, double t);

/// Failure intensity, the time derivative of mean_value. Same errors, plus
/// DomainError for POW with b < 1 at t = 0 where the intensity diverges.
double intensity(ModelKind kind, const Params& p, double t);

}  // namespace srgmcs
