#include "twobody/config.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "twobody/error.hpp"
#include "twobody/specfun.hpp"

namespace twobody {

namespace {

const std::map<std::string, Output>& output_table() {
  static const std::map<std::string, Output> t = {
      {"eigenvalues", Output::kEigenvalues}, {"measures", Output::kMeasures}, {"densities", Output::kDensities},
      {"spectrum", Output::kSpectrum},       {"revival", Output::kRevival},   {"comparison", Output::kComparison}};
  return t;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

double to_double(const std::string& key, const std::string& v) {
  std::size_t used = 0;
  double x = 0.0;
  try {
    x = std::stod(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != v.size() || !std::isfinite(x)) throw ConfigError(key + ": not a finite number: '" + v + "'");
  return x;
}

int to_int(const std::string& key, const std::string& v) {
  const double x = to_double(key, v);
  if (x != std::nearbyint(x) || std::fabs(x) > 1e9) throw ConfigError(key + ": not an integer: '" + v + "'");
  return static_cast<int>(x);
}

// shortest of %.15g .. %.17g that reads back exactly
std::string num(double x) {
  char buf[32];
  for (int p = 15; p <= 17; ++p) {
    std::snprintf(buf, sizeof buf, "%.*g", p, x);
    if (std::strtod(buf, nullptr) == x) break;
  }
  return buf;
}

using Setter = std::function<void(RunConfig&, const std::string&)>;

const std::map<std::string, Setter>& setters() {
  static const std::map<std::string, Setter> t = {
      {"name", [](RunConfig& c, const std::string& v) { c.name = v; }},
      {"g", [](RunConfig& c, const std::string& v) { c.g = to_double("g", v); }},
      {"convention",
       [](RunConfig& c, const std::string& v) {
         if (v == "energy_condition") c.convention = CouplingConvention::kEnergyCondition;
         else if (v == "hamiltonian") c.convention = CouplingConvention::kHamiltonian;
         else throw ConfigError("convention: expected energy_condition or hamiltonian, got '" + v + "'");
       }},
      {"L", [](RunConfig& c, const std::string& v) { c.L = to_double("L", v); }},
      {"cat_sign",
       [](RunConfig& c, const std::string& v) {
         if (v == "symmetric") c.cat_sign = CatSign::kSymmetric;
         else if (v == "antisymmetric") c.cat_sign = CatSign::kAntisymmetric;
         else throw ConfigError("cat_sign: expected symmetric or antisymmetric, got '" + v + "'");
       }},
      {"periods", [](RunConfig& c, const std::string& v) { c.periods = to_double("periods", v); }},
      {"samples_per_period",
       [](RunConfig& c, const std::string& v) { c.samples_per_period = to_int("samples_per_period", v); }},
      {"n_cm", [](RunConfig& c, const std::string& v) { c.basis.n_cm = to_int("n_cm", v); }},
      {"m_rel", [](RunConfig& c, const std::string& v) { c.basis.m_rel = to_int("m_rel", v); }},
      {"truncation_tolerance",
       [](RunConfig& c, const std::string& v) { c.truncation_tolerance = to_double("truncation_tolerance", v); }},
      {"n_g", [](RunConfig& c, const std::string& v) { c.n_g = to_int("n_g", v); }},
      {"x_max", [](RunConfig& c, const std::string& v) { c.x_max = to_double("x_max", v); }},
      {"n_p", [](RunConfig& c, const std::string& v) { c.gp.n_points = to_int("n_p", v); }},
      {"gp_dx", [](RunConfig& c, const std::string& v) { c.gp.dx = to_double("gp_dx", v); }},
      {"gp_dt", [](RunConfig& c, const std::string& v) { c.gp.dt = to_double("gp_dt", v); }},
      {"n_lambdas", [](RunConfig& c, const std::string& v) { c.n_lambdas = to_int("n_lambdas", v); }},
      {"density_interval",
       [](RunConfig& c, const std::string& v) { c.density_interval = to_double("density_interval", v); }},
      {"schmidt_checks", [](RunConfig& c, const std::string& v) { c.schmidt_checks = to_int("schmidt_checks", v); }},
      {"schmidt_order", [](RunConfig& c, const std::string& v) { c.schmidt_order = to_int("schmidt_order", v); }},
      {"outputs",
       [](RunConfig& c, const std::string& v) {
         c.outputs.clear();
         std::stringstream ss(v);
         std::string item;
         while (std::getline(ss, item, ',')) {
           item = trim(item);
           if (item.empty()) continue;
           const auto it = output_table().find(item);
           if (it == output_table().end()) throw ConfigError("outputs: unknown output '" + item + "'");
           c.outputs.insert(it->second);
         }
       }},
  };
  return t;
}

}  // namespace

int RunConfig::sample_count() const {
  return static_cast<int>(std::floor(periods * samples_per_period + 1e-9)) + 1;
}

std::string output_name(Output o) {
  for (const auto& [k, v] : output_table())
    if (v == o) return k;
  return "?";
}

void validate(const RunConfig& c) {
  const auto need = [](bool ok, const std::string& msg) {
    if (!ok) throw ConfigError(msg);
  };
  need(std::fabs(c.g) <= kMaxAbsCoupling, "g: |g| must be <= 5");
  need(c.L >= 0.0 && c.L <= kMaxDisplacement, "L: must lie in [0, 6]");
  need(c.cat_sign == CatSign::kSymmetric || c.L > 1e-4, "L: the antisymmetric cat needs L > 0");
  need(c.periods > 0.0 && c.periods <= kMaxPeriods, "periods: must lie in (0, 100]");
  need(c.samples_per_period >= 1 && c.samples_per_period <= 4096, "samples_per_period: must lie in [1, 4096]");
  need(c.basis.n_cm >= 1 && c.basis.n_cm <= specfun::kMaxHermiteOrder + 1, "n_cm: must lie in [1, 121]");
  need(c.basis.m_rel >= 1 && c.basis.m_rel <= 60, "m_rel: must lie in [1, 60]");
  need(c.truncation_tolerance > 0.0 && c.truncation_tolerance < 1.0, "truncation_tolerance: must lie in (0, 1)");
  need(c.n_g >= 16 && c.n_g % 2 == 0 && c.n_g <= 2048, "n_g: must be even and in [16, 2048]");
  need(c.x_max > 0.0, "x_max: must be positive");
  need(c.gp.n_points >= 16 && c.gp.n_points % 2 == 0, "n_p: must be even and >= 16");
  need(c.gp.dx > 0.0, "gp_dx: must be positive");
  need(c.gp.dt > 0.0 && c.gp.dt < 0.1, "gp_dt: must lie in (0, 0.1)");
  need(c.n_lambdas >= 1 && c.n_lambdas <= c.n_g, "n_lambdas: must lie in [1, n_g]");
  need(c.density_interval > 0.0, "density_interval: must be positive");
  need(c.schmidt_checks >= 0, "schmidt_checks: must be >= 0");
  need(c.schmidt_order >= 2 && c.schmidt_order <= 200, "schmidt_order: must lie in [2, 200]");
  if (c.needs_gp()) {
    // the exact k-grid has to sit on GP k-grid points for the comparison
    const Grid1D ek = Grid1D(c.n_g, c.x_max).conjugate();
    const Grid1D gk = Grid1D(c.gp.n_points, 0.5 * c.gp.n_points * c.gp.dx).conjugate();
    const double ratio = ek.step() / gk.step();
    const double shift = (ek.at(0) - gk.at(0)) / gk.step();
    need(std::fabs(ratio - std::nearbyint(ratio)) < 1e-9 && std::fabs(shift - std::nearbyint(shift)) < 1e-9 &&
             ek.at(0) >= gk.at(0) - 1e-9 && ek.at(ek.n - 1) <= gk.at(gk.n - 1) + 1e-9,
         "grid: the exact momentum grid must be a subset of the GP momentum grid");
  }
}

RunConfig parse_config(const std::string& text) {
  RunConfig c;
  std::stringstream ss(text);
  std::string line;
  int lineno = 0;
  std::set<std::string> seen;
  while (std::getline(ss, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    const auto it = setters().find(key);
    if (it == setters().end()) throw ConfigError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    if (!seen.insert(key).second) throw ConfigError("line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
    it->second(c, value);
  }
  validate(c);
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::vector<std::string> preset_names() { return {"fig1", "fig2", "fig3", "fig4", "fig5", "fig7"}; }

RunConfig preset(const std::string& name) {
  RunConfig c;
  c.name = name;
  if (name == "fig1") {
    c.g = -0.2;
    c.L = 1.0;
    c.periods = 12.0;
  } else if (name == "fig2") {
    c.g = -0.2;
    c.L = 3.0;
    c.periods = 20.0;
  } else if (name == "fig3") {
    c.g = -0.4;
    c.L = 2.0;
    c.periods = 20.0;
  } else if (name == "fig4") {
    c.g = -0.04;
    c.L = 2.0;
    c.periods = 40.0;
    c.samples_per_period = 32;
  } else if (name == "fig5") {
    c.g = -0.2;
    c.L = 3.0;
    c.cat_sign = CatSign::kAntisymmetric;
    c.periods = 20.0;
  } else if (name == "fig7") {
    // spectral decomposition plus the revival it predicts
    c.g = -0.2;
    c.L = 3.0;
    c.periods = 14.0;
    c.outputs = {Output::kSpectrum, Output::kRevival, Output::kEigenvalues};
  } else {
    throw ConfigError("unknown preset '" + name + "'");
  }
  validate(c);
  return c;
}

nlohmann::ordered_json to_json(const RunConfig& c) {
  nlohmann::ordered_json j;
  j["name"] = c.name;
  j["g"] = c.g;
  j["convention"] = c.convention == CouplingConvention::kHamiltonian ? "hamiltonian" : "energy_condition";
  j["L"] = c.L;
  j["cat_sign"] = c.cat_sign == CatSign::kSymmetric ? "symmetric" : "antisymmetric";
  j["periods"] = c.periods;
  j["samples_per_period"] = c.samples_per_period;
  j["n_cm"] = c.basis.n_cm;
  j["m_rel"] = c.basis.m_rel;
  j["truncation_tolerance"] = c.truncation_tolerance;
  j["n_g"] = c.n_g;
  j["x_max"] = c.x_max;
  j["n_p"] = c.gp.n_points;
  j["gp_dx"] = c.gp.dx;
  j["gp_dt"] = c.gp.dt;
  j["n_lambdas"] = c.n_lambdas;
  j["density_interval"] = c.density_interval;
  j["schmidt_checks"] = c.schmidt_checks;
  j["schmidt_order"] = c.schmidt_order;
  std::string outs;
  for (Output o : c.outputs) outs += (outs.empty() ? "" : ",") + output_name(o);
  j["outputs"] = outs;
  return j;
}

std::string to_config_text(const RunConfig& c) {
  std::string out;
  const nlohmann::ordered_json j = to_json(c);  // items() does not extend a temporary's lifetime
  for (const auto& [k, v] : j.items()) {
    out += k + " = " + (v.is_string() ? v.get<std::string>() : v.is_number_integer() ? std::to_string(v.get<long>()) : num(v.get<double>())) + "\n";
  }
  return out;
}

}  // namespace twobody
