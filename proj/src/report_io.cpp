#include "srgmcs/report_io.hpp"

#include <array>
#include <charconv>
#include <json.hpp>

#include "srgmcs/error.hpp"

namespace srgmcs {

namespace {

using Json = nlohmann::ordered_json;

std::string number(double v) {
  std::array<char, 32> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), end);
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string csv_row(ModelKind model, std::string_view dataset, double fraction,
                    std::uint64_t seed, const Params& p, double train,
                    const std::optional<double>& test) {
  std::string row;
  row += model_code(model);
  row += ',' + csv_field(dataset);
  row += ',' + number(fraction);
  row += ',' + std::to_string(seed);
  row += ',' + number(p.a);
  row += ',' + number(p.b);
  row += ',' + number(train);
  row += ',';
  if (test) row += number(*test);
  return row + '\n';
}

Json optional_number(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

Json params_json(const Params& p) { return Json{{"a", p.a}, {"b", p.b}}; }

Json to_json(const FitReport& r) {
  Json j;
  j["model"] = model_code(r.model);
  j["dataset"] = r.dataset_name;
  j["train_fraction"] = r.split.train_fraction;
  j["seed"] = r.seed;
  j["params"] = params_json(r.params);
  j["train_rmse"] = r.train_rmse;
  j["test_rmse"] = optional_number(r.test_rmse);
  j["config"] = Json{{"n_nests", r.config.n_nests},
                     {"n_cuckoos_per_gen", r.config.n_cuckoos_per_gen},
                     {"eggs_per_nest", r.config.eggs_per_nest},
                     {"max_generations", r.config.max_generations},
                     {"alpha", r.config.alpha},
                     {"pa", r.config.pa},
                     {"levy_exponent", r.config.levy_exponent},
                     {"seed", r.config.seed}};
  j["bounds"] = Json{{"a_lower", r.bounds.a_lower},
                     {"a_upper", r.bounds.a_upper},
                     {"b_lower", r.bounds.b_lower},
                     {"b_upper", r.bounds.b_upper}};
  j["engine"] = Json{{"generations", r.engine.generations},
                     {"evaluations", r.engine.evaluations}};
  j["aggregate"] = Json{{"n_seeds", r.aggregate.n_seeds},
                        {"base_seed", r.aggregate.base_seed},
                        {"mean_train_rmse", r.aggregate.mean_train_rmse},
                        {"sd_train_rmse", r.aggregate.sd_train_rmse}};
  if (!r.references.empty()) {
    Json refs = Json::object();
    for (const auto& [k, v] : r.references) refs[k] = v;
    j["references"] = std::move(refs);
  }
  if (r.timestamp) j["timestamp"] = *r.timestamp;
  return j;
}

ModelKind model_from(const Json& j) {
  const auto kind = parse_model(j.get<std::string>());
  if (!kind) throw ParseError("unknown model '" + j.get<std::string>() + "'", 0);
  return *kind;
}

std::optional<double> optional_from(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<double>();
}

FitReport from_json(const Json& j) {
  FitReport r;
  r.model = model_from(j.at("model"));
  r.dataset_name = j.at("dataset").get<std::string>();
  r.split.train_fraction = j.at("train_fraction").get<double>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.params = {j.at("params").at("a").get<double>(), j.at("params").at("b").get<double>()};
  r.train_rmse = j.at("train_rmse").get<double>();
  r.test_rmse = optional_from(j.at("test_rmse"));
  const Json& c = j.at("config");
  r.config.n_nests = c.at("n_nests").get<std::size_t>();
  r.config.n_cuckoos_per_gen = c.at("n_cuckoos_per_gen").get<std::size_t>();
  r.config.eggs_per_nest = c.at("eggs_per_nest").get<std::size_t>();
  r.config.max_generations = c.at("max_generations").get<std::size_t>();
  r.config.alpha = c.at("alpha").get<double>();
  r.config.pa = c.at("pa").get<double>();
  r.config.levy_exponent = c.at("levy_exponent").get<double>();
  r.config.seed = c.at("seed").get<std::uint64_t>();
  const Json& b = j.at("bounds");
  r.bounds = {b.at("a_lower").get<double>(), b.at("a_upper").get<double>(),
              b.at("b_lower").get<double>(), b.at("b_upper").get<double>()};
  r.engine = {j.at("engine").at("generations").get<std::size_t>(),
              j.at("engine").at("evaluations").get<std::size_t>()};
  const Json& agg = j.at("aggregate");
  r.aggregate = {agg.at("n_seeds").get<std::size_t>(), agg.at("base_seed").get<std::uint64_t>(),
                 agg.at("mean_train_rmse").get<double>(), agg.at("sd_train_rmse").get<double>()};
  if (auto it = j.find("references"); it != j.end()) {
    for (const auto& [k, v] : it->items()) r.references[k] = v.get<double>();
  }
  if (auto it = j.find("timestamp"); it != j.end()) r.timestamp = it->get<std::string>();
  return r;
}

Json parse_text(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid report JSON: ") + e.what(), 0);
  }
}

template <typename F>
auto convert(F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed report: ") + e.what(), 0);
  }
}

}  // namespace

std::optional<Format> parse_format(std::string_view text) {
  if (text == "json") return Format::Json;
  if (text == "csv") return Format::Csv;
  return std::nullopt;
}

std::string emit(const FitReport& report, Format format) {
  if (format == Format::Json) return to_json(report).dump(2) + '\n';
  return std::string(kCsvHeader) + '\n' +
         csv_row(report.model, report.dataset_name, report.split.train_fraction, report.seed,
                 report.params, report.train_rmse, report.test_rmse);
}

std::string emit(const std::vector<FitReport>& reports, Format format) {
  if (format == Format::Json) {
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    return arr.dump(2) + '\n';
  }
  std::string out = std::string(kCsvHeader) + '\n';
  for (const auto& r : reports) {
    out += csv_row(r.model, r.dataset_name, r.split.train_fraction, r.seed, r.params,
                   r.train_rmse, r.test_rmse);
  }
  return out;
}

std::string emit(const SplitStudyReport& report, Format format) {
  if (format == Format::Json) {
    Json rows = Json::array();
    for (const auto& row : report.rows) {
      rows.push_back(Json{{"train_fraction", row.train_fraction},
                          {"seed", row.seed},
                          {"params", params_json(row.params)},
                          {"train_rmse", row.train_rmse},
                          {"test_rmse", optional_number(row.test_rmse)}});
    }
    Json j;
    j["model"] = model_code(report.model);
    j["dataset"] = report.dataset_name;
    j["rows"] = std::move(rows);
    return j.dump(2) + '\n';
  }
  std::string out = std::string(kCsvHeader) + '\n';
  for (const auto& row : report.rows) {
    out += csv_row(report.model, report.dataset_name, row.train_fraction, row.seed, row.params,
                   row.train_rmse, row.test_rmse);
  }
  return out;
}

std::string emit(const CompareReport& report, Format format) { return emit(report.cells, format); }

std::string emit_plot_data(const CompareReport& report, std::size_t dataset_index) {
  std::string out = "model value_group value\n";
  for (std::size_t m = 0; m < report.models.size(); ++m) {
    const FitReport& cell = report.at(dataset_index, m);
    const std::string label(model_label(cell.model));
    out += label + " CS " + number(cell.train_rmse) + '\n';
    for (const auto& [key, value] : cell.references) {
      const auto dot = key.rfind('.');
      if (dot == std::string::npos || key.substr(dot + 1) != "train") continue;
      const std::string algorithm = key.substr(0, dot);
      out += label + ' ' + (algorithm == "CS" ? std::string("CS-published") : algorithm) + ' ' +
             number(value) + '\n';
    }
  }
  return out;
}

FitReport parse_fit_report(std::string_view json) {
  const Json j = parse_text(json);
  return convert([&] { return from_json(j); });
}

std::vector<FitReport> parse_fit_reports(std::string_view json) {
  const Json j = parse_text(json);
  return convert([&] {
    std::vector<FitReport> out;
    for (const auto& item : j) out.push_back(from_json(item));
    return out;
  });
}

SplitStudyReport parse_split_study(std::string_view json) {
  const Json j = parse_text(json);
  return convert([&] {
    SplitStudyReport r;
    r.model = model_from(j.at("model"));
    r.dataset_name = j.at("dataset").get<std::string>();
    for (const auto& row : j.at("rows")) {
      r.rows.push_back({row.at("train_fraction").get<double>(), row.at("train_rmse").get<double>(),
                        optional_from(row.at("test_rmse")),
                        {row.at("params").at("a").get<double>(),
                         row.at("params").at("b").get<double>()},
                        row.at("seed").get<std::uint64_t>()});
    }
    return r;
  });
}

}  // namespace srgmcs
