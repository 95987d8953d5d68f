#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "twobody/analysis.hpp"
#include "twobody/config.hpp"

namespace twobody {

struct InvariantCheck {
  std::string name;
  bool passed = true;
  double value = 0.0;  // worst observed
  double limit = 0.0;
  std::string detail;
};

/// One written density snapshot.
struct DensitySnapshot {
  double time = 0.0;
  std::vector<double> exact, gp, orbital1;
};

/// Everything a run computes; write_artifacts turns it into files.
struct RunResult {
  RunConfig config;
  double completeness = 0.0;
  Grid1D k_grid;

  std::vector<double> times;
  std::vector<std::vector<double>> lambdas;  // top n_lambdas per sample
  std::vector<double> branch;                // tracked initial-orbital occupation
  std::vector<int> branch_rank;
  std::vector<double> branch_overlap;
  MeasureSeries series;
  std::vector<double> norm;         // ‖ψ‖² per sample
  std::vector<double> exact_parity; // max_k |n(k) - n(-k)|
  std::vector<double> cm_x2;

  bool has_gp = false;
  std::vector<double> gp_norm, gp_energy, gp_parity;
  std::vector<DensityComparison> comparison;
  std::vector<DensitySnapshot> densities;

  std::vector<SpectralLine> spectrum;
  RevivalReport revival;
  std::vector<double> schmidt_times, schmidt_deviation;

  std::vector<InvariantCheck> checks;
  double wall_seconds = 0.0;

  bool passed() const;
};

/// Runs the exact pipeline over all time samples (parallel across samples),
/// the GP propagation when densities or comparisons are requested, and the
/// invariant checks. Throws TruncationError when the basis is too small.
RunResult simulate(const RunConfig& config, std::ostream* log = nullptr);

/// eigenvalues.csv, measures.csv, density_t*.csv, spectrum.csv,
/// comparison.csv, revival.json, summary.json as requested.
void write_artifacts(const RunResult& r, const std::string& dir);

/// Writes summary.json for a run that aborted before producing results.
void write_abort_summary(const RunConfig& c, const std::string& reason, const std::string& dir);

/// Fixed formatting for every CSV number (12 significant digits).
std::string format_number(double x);

}  // namespace twobody
