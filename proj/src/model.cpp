#include "srgmcs/model.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

#include "srgmcs/error.hpp"

namespace srgmcs {

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

void check_inputs(const Params& p, double t) {
  if (!std::isfinite(t) || !std::isfinite(p.a) || !std::isfinite(p.b)) {
    throw DomainError("non-finite model input");
  }
  if (t < 0.0) throw DomainError("time must be >= 0, got " + std::to_string(t));
  if (p.a <= 0.0) throw DomainError("parameter a must be > 0, got " + std::to_string(p.a));
  if (p.b <= 0.0) throw DomainError("parameter b must be > 0, got " + std::to_string(p.b));
}

double finite_or_fault(double v, const char* what) {
  if (!std::isfinite(v)) throw EvaluationFault(std::string(what) + " is not finite");
  return v;
}

// 1 - (1 + x) e^{-x}, accurate for small x where the two terms cancel.
double delayed_s_fraction(double x) {
  if (x < 0.1) {
    // sum_{k>=2} (-1)^k (k-1) x^k / k!
    double term = x;  // x^k / k! at k = 1
    double sum = 0.0;
    for (int k = 2; k < 30; ++k) {
      term *= x / k;
      const double contrib = (k % 2 == 0 ? 1.0 : -1.0) * (k - 1) * term;
      sum += contrib;
      if (std::abs(contrib) < 1e-18 * std::abs(sum)) break;
    }
    return sum;
  }
  return -std::expm1(-x) - x * std::exp(-x);
}

}  // namespace

std::string_view model_code(ModelKind kind) noexcept {
  switch (kind) {
    case ModelKind::GoelOkumoto: return "go";
    case ModelKind::Power: return "pow";
    case ModelKind::DelayedSShaped: return "dss";
    case ModelKind::MusaOkumoto: return "mo";
  }
  return "?";
}

std::string_view model_label(ModelKind kind) noexcept {
  switch (kind) {
    case ModelKind::GoelOkumoto: return "G-O";
    case ModelKind::Power: return "POW";
    case ModelKind::DelayedSShaped: return "DSS";
    case ModelKind::MusaOkumoto: return "M-O";
  }
  return "?";
}

std::optional<ModelKind> parse_model(std::string_view text) {
  const std::string key = lower(text);
  for (ModelKind k : kAllModels) {
    if (key == model_code(k) || key == lower(model_label(k))) return k;
  }
  if (key == "exp") return ModelKind::GoelOkumoto;
  return std::nullopt;
}

std::string model_code_list() {
  std::string out;
  for (ModelKind k : kAllModels) {
    if (!out.empty()) out += ", ";
    out += model_code(k);
  }
  return out;
}

void ParamBounds::check() const {
  for (double v : {a_lower, a_upper, b_lower, b_upper}) {
    if (!std::isfinite(v) || v <= 0.0) {
      throw ConfigError("parameter bounds must be finite and strictly positive");
    }
  }
  if (!(a_lower < a_upper)) throw ConfigError("bounds require a_lower < a_upper");
  if (!(b_lower < b_upper)) throw ConfigError("bounds require b_lower < b_upper");
}

ParamBounds default_bounds() noexcept { return {1e-5, 2000.0, 1e-5, 1.0}; }

Validation validate(const Params& p, const ParamBounds& bounds) {
  auto reject = [](std::string why) { return Validation{false, std::move(why)}; };
  if (!(p.a >= bounds.a_lower)) return reject("a below lower bound");
  if (!(p.a <= bounds.a_upper)) return reject("a above upper bound");
  if (!(p.b >= bounds.b_lower)) return reject("b below lower bound");
  if (!(p.b <= bounds.b_upper)) return reject("b above upper bound");
  return {};
}

double mean_value(ModelKind kind, const Params& p, double t) {
  check_inputs(p, t);
  const double bt = p.b * t;
  double mu = 0.0;
  switch (kind) {
    case ModelKind::GoelOkumoto:
      mu = p.a * -std::expm1(-bt);
      break;
    case ModelKind::Power:
      mu = t == 0.0 ? 0.0 : p.a * std::pow(t, p.b);
      break;
    case ModelKind::DelayedSShaped:
      mu = p.a * delayed_s_fraction(bt);
      break;
    case ModelKind::MusaOkumoto:
      mu = p.a * std::log1p(bt);
      break;
  }
  return finite_or_fault(mu, "mean value");
}

double intensity(ModelKind kind, const Params& p, double t) {
  check_inputs(p, t);
  const double bt = p.b * t;
  double lambda = 0.0;
  switch (kind) {
    case ModelKind::GoelOkumoto:
      lambda = p.a * p.b * std::exp(-bt);
      break;
    case ModelKind::Power:
      if (t == 0.0) {
        if (p.b < 1.0) throw DomainError("power-model intensity diverges at t = 0 for b < 1");
        lambda = p.b == 1.0 ? p.a : 0.0;
      } else {
        lambda = p.a * p.b * std::pow(t, p.b - 1.0);
      }
      break;
    case ModelKind::DelayedSShaped:
      lambda = p.a * p.b * p.b * t * std::exp(-bt);
      break;
    case ModelKind::MusaOkumoto:
      lambda = p.a * p.b / (1.0 + bt);
      break;
  }
  return finite_or_fault(lambda, "intensity");
}

}  // namespace srgmcs
