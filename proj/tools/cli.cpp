#include "cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "srgmcs/dataset.hpp"
#include "srgmcs/error.hpp"
#include "srgmcs/harness.hpp"
#include "srgmcs/reference.hpp"
#include "srgmcs/report_io.hpp"

namespace srgmcs::cli {

namespace {

// Thrown for command-line mistakes detected after CLI11 parsing.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CommonOptions {
  std::string data;
  double train_fraction = 0.7;
  std::uint64_t seed = 0;
  std::size_t seeds = 10;
  std::size_t generations = CsConfig{}.max_generations;
  std::size_t nests = CsConfig{}.n_nests;
  std::size_t cuckoos = CsConfig{}.n_cuckoos_per_gen;
  double pa = CsConfig{}.pa;
  double alpha = CsConfig{}.alpha;
  double levy_exponent = CsConfig{}.levy_exponent;
  std::string bounds;
  std::string out;
  std::string format = "json";
  bool references = false;
  bool timestamp = false;
};

double parse_double(std::string_view text, const std::string& what) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw UsageError("invalid number '" + std::string(text) + "' in " + what);
  }
  return v;
}

std::vector<double> parse_list(const std::string& text, char sep, const std::string& what) {
  std::vector<double> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) out.push_back(parse_double(item, what));
  return out;
}

ModelKind model_arg(const std::string& text) {
  if (auto kind = parse_model(text)) return *kind;
  throw UsageError("unknown model '" + text + "'; valid models: " + model_code_list());
}

Format format_arg(const std::string& text) {
  if (auto f = parse_format(text)) return *f;
  throw UsageError("unknown format '" + text + "'; valid formats: json, csv");
}

ParamBounds bounds_arg(const std::string& text) {
  if (text.empty()) return default_bounds();
  const auto v = parse_list(text, ':', "--bounds");
  if (v.size() != 4) throw UsageError("--bounds expects a_lo:a_hi:b_lo:b_hi");
  ParamBounds b{v[0], v[1], v[2], v[3]};
  b.check();
  return b;
}

CsConfig config_from(const CommonOptions& o) {
  CsConfig cfg;
  cfg.n_nests = o.nests;
  cfg.n_cuckoos_per_gen = o.cuckoos;
  cfg.max_generations = o.generations;
  cfg.alpha = o.alpha;
  cfg.pa = o.pa;
  cfg.levy_exponent = o.levy_exponent;
  cfg.seed = o.seed;
  cfg.check();
  return cfg;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buf;
}

void add_engine_options(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--seed", o.seed, "Base random seed")->capture_default_str();
  cmd->add_option("--seeds", o.seeds, "Independent runs; the best is reported")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd->add_option("--generations", o.generations, "Generations per run")->capture_default_str();
  cmd->add_option("--nests", o.nests, "Number of host nests")->capture_default_str();
  cmd->add_option("--cuckoos", o.cuckoos, "Cuckoos per generation")->capture_default_str();
  cmd->add_option("--pa", o.pa, "Fraction of worst nests abandoned per generation")
      ->capture_default_str();
  cmd->add_option("--alpha", o.alpha, "Levy step size")->capture_default_str();
  cmd->add_option("--levy-exponent", o.levy_exponent, "Levy tail exponent in (1, 3]")
      ->capture_default_str();
  cmd->add_option("--bounds", o.bounds, "Search box a_lo:a_hi:b_lo:b_hi (default 1e-5:2000:1e-5:1)");
  cmd->add_option("--out", o.out, "Write the report here instead of standard output");
  cmd->add_option("--format", o.format, "json or csv")->capture_default_str();
  cmd->add_flag("--references", o.references, "Attach published reference RMSE values");
  cmd->add_flag("--timestamp", o.timestamp, "Embed the UTC time in JSON reports");
}

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write '" + path + "'");
  file << text;
  if (!file) throw std::runtime_error("failed writing '" + path + "'");
}

void decorate(FitReport& r, const CommonOptions& o, const std::string& stamp) {
  if (o.references) r.references = references_for(r.dataset_name, r.model);
  if (o.timestamp) r.timestamp = stamp;
}

}  // namespace

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cuckoo Search parameter estimation for software reliability growth models",
               "srgm-cs"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");

  CommonOptions o;
  std::string model;
  std::vector<std::string> models;
  std::vector<std::string> data_files;
  std::string fractions;
  std::string plot_dir;

  auto* fit_cmd = app.add_subcommand("fit", "Fit one model on a chronological train/test split");
  fit_cmd->add_option("--model", model, "go, pow, dss or mo")->required();
  fit_cmd->add_option("--data", o.data, "Two-column failure data file")->required();
  fit_cmd->add_option("--train-fraction", o.train_fraction, "Training share in [0.5, 1]")
      ->capture_default_str();
  add_engine_options(fit_cmd, o);

  auto* cmp_cmd = app.add_subcommand("compare", "Full-training fits over models x datasets");
  cmp_cmd->add_option("--model", models, "Model (repeatable; default all four)")->delimiter(',');
  cmp_cmd->add_option("--data", data_files, "Data file (repeatable)")->required();
  cmp_cmd->add_option("--plot-dir", plot_dir, "Write <dataset>.dat grouped-bar data here");
  add_engine_options(cmp_cmd, o);

  auto* study_cmd = app.add_subcommand("split-study", "Train/test split impact study");
  study_cmd->add_option("--model", model, "go, pow, dss or mo")->required();
  study_cmd->add_option("--data", o.data, "Two-column failure data file")->required();
  study_cmd->add_option("--fractions", fractions, "Training fractions")
      ->default_str("0.9,0.8,0.7,0.6,0.5");
  add_engine_options(study_cmd, o);

  std::string gen_params;
  std::string gen_times = "1:50";
  double noise_sd = 0.0;
  std::string gen_name = "synthetic";
  auto* gen_cmd = app.add_subcommand("gen", "Generate a synthetic failure dataset");
  gen_cmd->add_option("--model", model, "go, pow, dss or mo")->required();
  gen_cmd->add_option("--params", gen_params, "True parameters a:b")->required();
  gen_cmd->add_option("--times", gen_times, "start:stop[:step] or a comma list")
      ->capture_default_str();
  gen_cmd->add_option("--noise-sd", noise_sd, "Gaussian noise standard deviation")
      ->capture_default_str();
  gen_cmd->add_option("--seed", o.seed, "Noise seed")->capture_default_str();
  gen_cmd->add_option("--name", gen_name, "Dataset name")->capture_default_str();
  gen_cmd->add_option("--out", o.out, "Write the dataset here instead of standard output");

  auto* val_cmd = app.add_subcommand("validate", "Check a data file against the dataset invariants");
  val_cmd->add_option("--data", o.data, "Two-column failure data file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    // Subcommand help arrives here too.
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
      for (auto* sub : app.get_subcommands()) out << sub->help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    const std::string stamp = o.timestamp ? utc_timestamp() : std::string{};

    if (fit_cmd->parsed()) {
      const ModelKind kind = model_arg(model);
      const Format format = format_arg(o.format);
      const ParamBounds bounds = bounds_arg(o.bounds);
      const CsConfig cfg = config_from(o);
      SplitSpec{o.train_fraction}.check();
      const FailureDataset ds = load_file(o.data);
      FitReport r = fit(kind, ds, SplitSpec{o.train_fraction}, cfg, o.seeds, bounds);
      decorate(r, o, stamp);
      write_output(emit(r, format), o.out, out);
    } else if (cmp_cmd->parsed()) {
      std::vector<ModelKind> kinds;
      for (const auto& m : models) kinds.push_back(model_arg(m));
      if (kinds.empty()) kinds.assign(kAllModels.begin(), kAllModels.end());
      const Format format = format_arg(o.format);
      const ParamBounds bounds = bounds_arg(o.bounds);
      const CsConfig cfg = config_from(o);
      std::vector<FailureDataset> datasets;
      for (const auto& path : data_files) datasets.push_back(load_file(path));
      CompareReport r = compare(kinds, datasets, cfg, o.seeds, bounds);
      for (auto& cell : r.cells) decorate(cell, o, stamp);
      write_output(emit(r, format), o.out, out);
      if (!plot_dir.empty()) {
        std::filesystem::create_directories(plot_dir);
        for (std::size_t d = 0; d < r.datasets.size(); ++d) {
          const auto path = std::filesystem::path(plot_dir) / (r.datasets[d] + ".dat");
          write_output(emit_plot_data(r, d), path.string(), out);
        }
      }
    } else if (study_cmd->parsed()) {
      const ModelKind kind = model_arg(model);
      const Format format = format_arg(o.format);
      const ParamBounds bounds = bounds_arg(o.bounds);
      const CsConfig cfg = config_from(o);
      const std::vector<double> grid =
          fractions.empty() ? default_fractions() : parse_list(fractions, ',', "--fractions");
      for (double f : grid) SplitSpec{f}.check();
      const FailureDataset ds = load_file(o.data);
      const SplitStudyReport r = split_study(kind, ds, grid, cfg, o.seeds, bounds);
      write_output(emit(r, format), o.out, out);
    } else if (gen_cmd->parsed()) {
      const ModelKind kind = model_arg(model);
      const auto ab = parse_list(gen_params, ':', "--params");
      if (ab.size() != 2) throw UsageError("--params expects a:b");
      std::vector<double> times;
      if (gen_times.find(':') != std::string::npos) {
        const auto r = parse_list(gen_times, ':', "--times");
        if (r.size() < 2 || r.size() > 3) throw UsageError("--times expects start:stop[:step]");
        times = time_grid(r[0], r[1], r.size() == 3 ? r[2] : 1.0);
      } else {
        times = parse_list(gen_times, ',', "--times");
      }
      const FailureDataset ds = generate(kind, Params{ab[0], ab[1]}, times, noise_sd, o.seed,
                                         gen_name);
      std::ostringstream text;
      save(text, ds);
      write_output(text.str(), o.out, out);
    } else if (val_cmd->parsed()) {
      const FailureDataset ds = load_file(o.data);
      nlohmann::ordered_json j;
      j["dataset"] = ds.name();
      j["records"] = ds.size();
      j["status"] = "ok";
      out << j.dump() << "\n";
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return gen_cmd->parsed() ? kExitUsage : kExitRuntime;
  } catch (const ParseError& e) {
    err << "data error: " << e.what() << "\n";
    return kExitData;
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << "\n";
    return kExitData;
  } catch (const std::exception& e) {
    err << "runtime error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitOk;
}

}  // namespace srgmcs::cli
