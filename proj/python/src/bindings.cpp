#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "srgmcs/cuckoo.hpp"
#include "srgmcs/dataset.hpp"
#include "srgmcs/error.hpp"
#include "srgmcs/harness.hpp"
#include "srgmcs/model.hpp"
#include "srgmcs/objective.hpp"
#include "srgmcs/reference.hpp"
#include "srgmcs/report_io.hpp"

namespace py = pybind11;
using namespace srgmcs;

namespace {

ModelKind to_kind(const py::handle& h) {
  if (py::isinstance<ModelKind>(h)) return h.cast<ModelKind>();
  const auto text = h.cast<std::string>();
  if (auto k = parse_model(text)) return *k;
  throw py::value_error("unknown model '" + text + "'; valid models: " + model_code_list());
}

Format to_format(const std::string& text) {
  if (auto f = parse_format(text)) return *f;
  throw py::value_error("format must be 'json' or 'csv'");
}

FailureDataset make_dataset(const std::vector<std::pair<double, double>>& rows,
                            const std::string& name) {
  std::vector<FailureRecord> records;
  records.reserve(rows.size());
  for (const auto& [t, m] : rows) records.push_back({t, m});
  return FailureDataset(name, std::move(records));
}

CsConfig make_config(std::size_t n_nests, std::size_t n_cuckoos, std::size_t generations,
                     double alpha, double pa, double levy_exponent, std::uint64_t seed) {
  CsConfig cfg;
  cfg.n_nests = n_nests;
  cfg.n_cuckoos_per_gen = n_cuckoos;
  cfg.max_generations = generations;
  cfg.alpha = alpha;
  cfg.pa = pa;
  cfg.levy_exponent = levy_exponent;
  cfg.seed = seed;
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Cuckoo Search parameter estimation for software reliability growth models";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<EvaluationFault>(m, "EvaluationFault", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
  py::register_exception<ConfigError>(m, "ConfigError", base.ptr());

  py::enum_<ModelKind>(m, "ModelKind")
      .value("GO", ModelKind::GoelOkumoto)
      .value("POW", ModelKind::Power)
      .value("DSS", ModelKind::DelayedSShaped)
      .value("MO", ModelKind::MusaOkumoto);

  py::class_<Params>(m, "Params")
      .def(py::init<>())
      .def(py::init([](double a, double b) { return Params{a, b}; }), py::arg("a"), py::arg("b"))
      .def_readwrite("a", &Params::a)
      .def_readwrite("b", &Params::b)
      .def(py::self == py::self)
      .def("__repr__", [](const Params& p) {
        std::ostringstream s;
        s << "Params(a=" << p.a << ", b=" << p.b << ")";
        return s.str();
      });

  py::class_<ParamBounds>(m, "ParamBounds")
      .def(py::init([](double al, double au, double bl, double bu) {
             ParamBounds b{al, au, bl, bu};
             b.check();
             return b;
           }),
           py::arg("a_lower"), py::arg("a_upper"), py::arg("b_lower"), py::arg("b_upper"))
      .def_readonly("a_lower", &ParamBounds::a_lower)
      .def_readonly("a_upper", &ParamBounds::a_upper)
      .def_readonly("b_lower", &ParamBounds::b_lower)
      .def_readonly("b_upper", &ParamBounds::b_upper);

  m.def("default_bounds", &default_bounds);
  m.def("validate", [](const Params& p, const ParamBounds& b) {
    const Validation v = validate(p, b);
    return py::make_tuple(v.accepted, v.reason);
  }, "Returns (accepted, reason).");
  m.def("mean_value", [](const py::handle& k, const Params& p, double t) {
    return mean_value(to_kind(k), p, t);
  }, py::arg("kind"), py::arg("params"), py::arg("t"));
  m.def("intensity", [](const py::handle& k, const Params& p, double t) {
    return intensity(to_kind(k), p, t);
  }, py::arg("kind"), py::arg("params"), py::arg("t"));

  py::class_<FailureDataset>(m, "FailureDataset")
      .def(py::init(&make_dataset), py::arg("records"), py::arg("name") = "data")
      .def_property_readonly("name", &FailureDataset::name)
      .def("__len__", &FailureDataset::size)
      .def("records", [](const FailureDataset& ds) {
        std::vector<std::pair<double, double>> out;
        for (const auto& r : ds.records()) out.emplace_back(r.time, r.cumulative_failures);
        return out;
      })
      .def("to_text", [](const FailureDataset& ds) {
        std::ostringstream s;
        save(s, ds);
        return s.str();
      });

  m.def("load", [](const std::string& text, const std::string& name) {
    std::istringstream in(text);
    return load(in, name);
  }, py::arg("text"), py::arg("name") = "data", "Parse the two-column text format.");
  m.def("load_file", &load_file, py::arg("path"));
  m.def("split", [](const FailureDataset& ds, double fraction) {
    return split(ds, SplitSpec{fraction});
  }, py::arg("dataset"), py::arg("train_fraction"));
  m.def("generate", [](const py::handle& k, const Params& p, const std::vector<double>& times,
                       double noise_sd, std::uint64_t seed, const std::string& name) {
    return generate(to_kind(k), p, times, noise_sd, seed, name);
  }, py::arg("kind"), py::arg("params"), py::arg("times"), py::arg("noise_sd") = 0.0,
     py::arg("seed") = 0, py::arg("name") = "synthetic");

  m.def("rmse", [](const py::handle& k, const Params& p, const FailureDataset& ds) {
    return evaluate_on(to_kind(k), p, ds);
  }, py::arg("kind"), py::arg("params"), py::arg("dataset"));

  py::class_<CsConfig>(m, "CsConfig")
      .def(py::init(&make_config), py::arg("n_nests") = 10, py::arg("n_cuckoos_per_gen") = 1,
           py::arg("max_generations") = 100, py::arg("alpha") = 0.01, py::arg("pa") = 0.25,
           py::arg("levy_exponent") = 1.5, py::arg("seed") = 0)
      .def_readwrite("n_nests", &CsConfig::n_nests)
      .def_readwrite("n_cuckoos_per_gen", &CsConfig::n_cuckoos_per_gen)
      .def_readonly("eggs_per_nest", &CsConfig::eggs_per_nest)
      .def_readwrite("max_generations", &CsConfig::max_generations)
      .def_readwrite("alpha", &CsConfig::alpha)
      .def_readwrite("pa", &CsConfig::pa)
      .def_readwrite("levy_exponent", &CsConfig::levy_exponent)
      .def_readwrite("seed", &CsConfig::seed)
      .def("expected_evaluations", &CsConfig::expected_evaluations);

  py::class_<Nest>(m, "Nest")
      .def_readonly("params", &Nest::params)
      .def_readonly("fitness", &Nest::fitness);

  py::class_<FitOutcome>(m, "FitOutcome")
      .def_property_readonly("best", [](const FitOutcome& o) { return o.best; })
      .def_property_readonly("trace", [](const FitOutcome& o) {
        return o.trace.best_fitness_per_generation;
      })
      .def_property_readonly("evaluations", [](const FitOutcome& o) {
        return o.trace.evaluation_count;
      });

  m.def("run", [](const std::function<double(const Params&)>& objective, const CsConfig& cfg,
                  const ParamBounds& bounds) {
    // Python callables need the GIL; the engine itself is single-threaded.
    return run(objective, cfg, bounds);
  }, py::arg("objective"), py::arg("config"), py::arg("bounds") = default_bounds(),
     "Minimize a Python callable objective(Params) -> float.");
  m.def("run_model", [](const py::handle& k, const FailureDataset& ds, const CsConfig& cfg,
                        const ParamBounds& bounds) {
    const Objective obj(to_kind(k), ds);
    py::gil_scoped_release release;
    return run([&obj](const Params& p) { return obj.rmse(p); }, cfg, bounds);
  }, py::arg("kind"), py::arg("dataset"), py::arg("config"), py::arg("bounds") = default_bounds());

  py::class_<FitReport>(m, "FitReport")
      .def_property_readonly("model", [](const FitReport& r) { return std::string(model_code(r.model)); })
      .def_readonly("dataset_name", &FitReport::dataset_name)
      .def_property_readonly("train_fraction", [](const FitReport& r) { return r.split.train_fraction; })
      .def_readonly("train_rmse", &FitReport::train_rmse)
      .def_readonly("test_rmse", &FitReport::test_rmse)
      .def_readonly("params", &FitReport::params)
      .def_readonly("seed", &FitReport::seed)
      .def_readonly("config", &FitReport::config)
      .def_readwrite("references", &FitReport::references)
      .def("to_json", [](const FitReport& r) { return emit(r, Format::Json); })
      .def("to_csv", [](const FitReport& r) { return emit(r, Format::Csv); })
      .def(py::self == py::self);

  m.def("parse_fit_report", &parse_fit_report, py::arg("json"));
  m.def("references_for", [](const std::string& dataset, const py::handle& k) {
    return references_for(dataset, to_kind(k));
  });

  m.def("fit", [](const py::handle& k, const FailureDataset& ds, double fraction,
                  const CsConfig& cfg, std::size_t n_seeds, const ParamBounds& bounds) {
    const ModelKind kind = to_kind(k);
    py::gil_scoped_release release;
    return fit(kind, ds, SplitSpec{fraction}, cfg, n_seeds, bounds);
  }, py::arg("kind"), py::arg("dataset"), py::arg("train_fraction") = 0.7,
     py::arg("config") = CsConfig{}, py::arg("n_seeds") = 1, py::arg("bounds") = default_bounds());
  m.def("train_full", [](const py::handle& k, const FailureDataset& ds, const CsConfig& cfg,
                         std::size_t n_seeds, const ParamBounds& bounds) {
    const ModelKind kind = to_kind(k);
    py::gil_scoped_release release;
    return train_full(kind, ds, cfg, n_seeds, bounds);
  }, py::arg("kind"), py::arg("dataset"), py::arg("config") = CsConfig{}, py::arg("n_seeds") = 1,
     py::arg("bounds") = default_bounds());

  m.def("split_study", [](const py::handle& k, const FailureDataset& ds,
                          std::vector<double> fractions, const CsConfig& cfg, std::size_t n_seeds,
                          const std::string& format) {
    const ModelKind kind = to_kind(k);
    if (fractions.empty()) fractions = default_fractions();
    SplitStudyReport r;
    {
      py::gil_scoped_release release;
      r = split_study(kind, ds, fractions, cfg, n_seeds);
    }
    return emit(r, to_format(format));
  }, py::arg("kind"), py::arg("dataset"), py::arg("fractions") = std::vector<double>{},
     py::arg("config") = CsConfig{}, py::arg("n_seeds") = 1, py::arg("format") = "json",
     "Run a split-impact study and return the emitted report text.");

  m.def("compare", [](const std::vector<py::handle>& kinds, const std::vector<FailureDataset>& datasets,
                      const CsConfig& cfg, std::size_t n_seeds) {
    std::vector<ModelKind> ks;
    for (const auto& k : kinds) ks.push_back(to_kind(k));
    py::gil_scoped_release release;
    return compare(ks, datasets, cfg, n_seeds).cells;
  }, py::arg("kinds"), py::arg("datasets"), py::arg("config") = CsConfig{}, py::arg("n_seeds") = 1,
     "Full-training fits, row-major by (dataset, model).");

  m.def("emit", [](const std::vector<FitReport>& reports, const std::string& format) {
    return emit(reports, to_format(format));
  }, py::arg("reports"), py::arg("format") = "json");
}
