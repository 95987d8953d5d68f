#pragma once

#include <set>
#include <string>

#include "json.hpp"
#include "twobody/initial_state.hpp"
#include "twobody/meanfield.hpp"
#include "twobody/schmidt.hpp"

namespace twobody {

enum class Output { kEigenvalues, kMeasures, kDensities, kSpectrum, kRevival, kComparison };

struct RunConfig {
  std::string name = "custom";
  double g = -0.2;
  CouplingConvention convention = CouplingConvention::kEnergyCondition;
  double L = 1.0;
  CatSign cat_sign = CatSign::kSymmetric;
  double periods = 20.0;
  int samples_per_period = 64;
  BasisSize basis{};
  double truncation_tolerance = kDefaultTruncationTolerance;
  int n_g = 256;
  double x_max = 12.8;
  GPParams gp{};
  int n_lambdas = 6;
  double density_interval = 1.0;  // periods between density_t*.csv files
  int schmidt_checks = 3;         // time samples cross-checked against the product-basis oracle
  int schmidt_order = kDefaultSchmidtOrder;
  std::set<Output> outputs{Output::kEigenvalues, Output::kMeasures, Output::kDensities,
                           Output::kSpectrum,    Output::kRevival,  Output::kComparison};

  bool wants(Output o) const { return outputs.count(o) > 0; }
  bool needs_gp() const { return wants(Output::kDensities) || wants(Output::kComparison); }
  int sample_count() const;  // samples including t = 0
  double sample_time(int i) const { return static_cast<double>(i) / samples_per_period; }
};

inline constexpr double kMaxPeriods = 100.0;

/// Throws ConfigError naming the offending key.
void validate(const RunConfig& c);

/// `key = value` lines, `#` comments. Unknown keys are errors.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

/// fig1, fig2, fig3, fig4, fig5, fig7.
RunConfig preset(const std::string& name);
std::vector<std::string> preset_names();

/// Round-trippable echo: every key parse_config accepts.
nlohmann::ordered_json to_json(const RunConfig& c);
std::string to_config_text(const RunConfig& c);

std::string output_name(Output o);

}  // namespace twobody
