#include "srgmcs/reference.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace srgmcs {

namespace {

using enum ModelKind;

constexpr std::array kValues = {
    // 70% / 30% splits
    ReferenceValue{"data1", GoelOkumoto, "PSO", "train", 0.7, 20.2565},
    ReferenceValue{"data1", GoelOkumoto, "CS", "train", 0.7, 34.0933},
    ReferenceValue{"data1", GoelOkumoto, "PSO", "test", 0.7, 119.4374},
    ReferenceValue{"data1", GoelOkumoto, "CS", "test", 0.7, 16.8945},
    ReferenceValue{"data1", Power, "PSO", "train", 0.7, 22.2166},
    ReferenceValue{"data1", Power, "CS", "train", 0.7, 44.8663},
    ReferenceValue{"data1", Power, "PSO", "test", 0.7, 152.9372},
    ReferenceValue{"data1", Power, "CS", "test", 0.7, 33.6623},
    ReferenceValue{"data1", DelayedSShaped, "PSO", "train", 0.7, 15.9237},
    ReferenceValue{"data1", DelayedSShaped, "CS", "train", 0.7, 32.6376},
    ReferenceValue{"data1", DelayedSShaped, "PSO", "test", 0.7, 26.3015},
    ReferenceValue{"data1", DelayedSShaped, "CS", "test", 0.7, 10.9945},

    ReferenceValue{"data2", GoelOkumoto, "PSO", "train", 0.7, 24.9899},
    ReferenceValue{"data2", GoelOkumoto, "CS", "train", 0.7, 33.2311},
    ReferenceValue{"data2", GoelOkumoto, "PSO", "test", 0.7, 80.8963},
    ReferenceValue{"data2", GoelOkumoto, "CS", "test", 0.7, 14.2998},
    ReferenceValue{"data2", Power, "PSO", "train", 0.7, 32.3550},
    ReferenceValue{"data2", Power, "CS", "train", 0.7, 47.0571},
    ReferenceValue{"data2", Power, "PSO", "test", 0.7, 149.9684},
    ReferenceValue{"data2", Power, "CS", "test", 0.7, 56.6807},
    ReferenceValue{"data2", DelayedSShaped, "PSO", "train", 0.7, 20.8325},
    ReferenceValue{"data2", DelayedSShaped, "CS", "train", 0.7, 27.9159},
    ReferenceValue{"data2", DelayedSShaped, "PSO", "test", 0.7, 17.0638},
    ReferenceValue{"data2", DelayedSShaped, "CS", "test", 0.7, 11.8833},

    ReferenceValue{"data3", GoelOkumoto, "PSO", "train", 0.7, 12.8925},
    ReferenceValue{"data3", GoelOkumoto, "CS", "train", 0.7, 13.5404},
    ReferenceValue{"data3", GoelOkumoto, "PSO", "test", 0.7, 13.6094},
    ReferenceValue{"data3", GoelOkumoto, "CS", "test", 0.7, 8.9523},
    ReferenceValue{"data3", Power, "PSO", "train", 0.7, 11.9446},
    ReferenceValue{"data3", Power, "CS", "train", 0.7, 13.0886},
    ReferenceValue{"data3", Power, "PSO", "test", 0.7, 14.0524},
    ReferenceValue{"data3", Power, "CS", "test", 0.7, 13.4669},
    ReferenceValue{"data3", DelayedSShaped, "PSO", "train", 0.7, 18.5807},
    ReferenceValue{"data3", DelayedSShaped, "CS", "train", 0.7, 13.6634},
    ReferenceValue{"data3", DelayedSShaped, "PSO", "test", 0.7, 47.4036},
    ReferenceValue{"data3", DelayedSShaped, "CS", "test", 0.7, 15.1916},

    // full-training fits
    ReferenceValue{"project2", GoelOkumoto, "ACO", "train", 1.0, 60.0371},
    ReferenceValue{"project2", GoelOkumoto, "Ex-ACO", "train", 1.0, 28.5891},
    ReferenceValue{"project2", GoelOkumoto, "CS", "train", 1.0, 41.7971},
    ReferenceValue{"project2", Power, "ACO", "train", 1.0, 52.8854},
    ReferenceValue{"project2", Power, "Ex-ACO", "train", 1.0, 34.0521},
    ReferenceValue{"project2", Power, "CS", "train", 1.0, 45.9783},
    ReferenceValue{"project2", DelayedSShaped, "ACO", "train", 1.0, 52.8854},
    ReferenceValue{"project2", DelayedSShaped, "Ex-ACO", "train", 1.0, 33.0461},
    ReferenceValue{"project2", DelayedSShaped, "CS", "train", 1.0, 42.2256},
    ReferenceValue{"project2", MusaOkumoto, "ACO", "train", 1.0, 26.0385},
    ReferenceValue{"project2", MusaOkumoto, "Ex-ACO", "train", 1.0, 17.359},
    ReferenceValue{"project2", MusaOkumoto, "CS", "train", 1.0, 41.7732},

    ReferenceValue{"project3", GoelOkumoto, "ACO", "train", 1.0, 71.5489},
    ReferenceValue{"project3", GoelOkumoto, "Ex-ACO", "train", 1.0, 34.0709},
    ReferenceValue{"project3", GoelOkumoto, "CS", "train", 1.0, 21.7256},
    ReferenceValue{"project3", Power, "ACO", "train", 1.0, 57.5801},
    ReferenceValue{"project3", Power, "Ex-ACO", "train", 1.0, 47.5814},
    ReferenceValue{"project3", Power, "CS", "train", 1.0, 15.5885},
    ReferenceValue{"project3", DelayedSShaped, "ACO", "train", 1.0, 57.5801},
    ReferenceValue{"project3", DelayedSShaped, "Ex-ACO", "train", 1.0, 48.4914},
    ReferenceValue{"project3", DelayedSShaped, "CS", "train", 1.0, 22.4944},
    ReferenceValue{"project3", MusaOkumoto, "ACO", "train", 1.0, 36.1891},
    ReferenceValue{"project3", MusaOkumoto, "Ex-ACO", "train", 1.0, 24.126},
    ReferenceValue{"project3", MusaOkumoto, "CS", "train", 1.0, 19.5448},

    ReferenceValue{"project4", GoelOkumoto, "ACO", "train", 1.0, 71.4015},
    ReferenceValue{"project4", GoelOkumoto, "Ex-ACO", "train", 1.0, 35.0007},
    ReferenceValue{"project4", GoelOkumoto, "CS", "train", 1.0, 25.7682},
    ReferenceValue{"project4", Power, "ACO", "train", 1.0, 53.2234},
    ReferenceValue{"project4", Power, "Ex-ACO", "train", 1.0, 34.2645},
    ReferenceValue{"project4", Power, "CS", "train", 1.0, 28.1951},
    ReferenceValue{"project4", DelayedSShaped, "ACO", "train", 1.0, 53.2234},
    ReferenceValue{"project4", DelayedSShaped, "Ex-ACO", "train", 1.0, 35.2635},
    ReferenceValue{"project4", DelayedSShaped, "CS", "train", 1.0, 25.7294},
    ReferenceValue{"project4", MusaOkumoto, "ACO", "train", 1.0, 33.1728},
    ReferenceValue{"project4", MusaOkumoto, "Ex-ACO", "train", 1.0, 22.1152},
    ReferenceValue{"project4", MusaOkumoto, "CS", "train", 1.0, 26.4575},
};

bool iequals(std::string_view x, std::string_view y) {
  return std::equal(x.begin(), x.end(), y.begin(), y.end(), [](char c, char d) {
    return std::tolower(static_cast<unsigned char>(c)) == std::tolower(static_cast<unsigned char>(d));
  });
}

}  // namespace

std::span<const ReferenceValue> reference_values() { return kValues; }

std::map<std::string, double> references_for(std::string_view dataset, ModelKind model) {
  std::map<std::string, double> out;
  for (const auto& v : kValues) {
    if (v.model == model && iequals(v.dataset, dataset)) {
      out.emplace(std::string(v.algorithm) + "." + std::string(v.phase), v.rmse);
    }
  }
  return out;
}

}  // namespace srgmcs
