#pragma once

#include <optional>
#include <vector>

#include "twobody/evolution.hpp"
#include "twobody/meanfield.hpp"

namespace twobody {

/// K = (Σλ²)^-1 and S = -Σ λ ln λ.
struct Measures {
  double K = 1.0;
  double S = 0.0;
};

inline constexpr double kEntropyFloor = 1e-14;

/// Clips eigenvalues to [0, 1] and renormalizes them to unit sum first.
Measures measures(const std::vector<double>& eigenvalues);
Measures measures(const NaturalOrbitalSet& orbitals);

struct MeasureSeries {
  std::vector<double> times;
  std::vector<double> K;
  std::vector<double> S;
  std::vector<std::vector<double>> lambdas;  // top j per sample
};

/// Follows the natural orbital continuously connected to the leading orbital
/// of the first sample, by maximal overlap with the previous sample's branch
/// orbital. Sorting by eigenvalue alone would swap branches at crossings.
class BranchTracker {
 public:
  void push(const NaturalOrbitalSet& set);

  const std::vector<double>& occupation() const { return occupation_; }
  const std::vector<int>& rank() const { return rank_; }       // position in the sorted spectrum
  const std::vector<double>& overlap() const { return overlap_; }  // |<prev|cur>| per step
  const std::vector<cplx>& orbital() const { return current_; }

 private:
  std::vector<cplx> current_;
  double dk_ = 0.0;
  std::vector<double> occupation_;
  std::vector<int> rank_;
  std::vector<double> overlap_;
};

struct SpectralLine {
  double energy = 0.0;
  double weight = 0.0;
  int n = 0;
  int m = 0;  // even relative label
};

inline constexpr double kSpectralWeightFloor = 1e-12;

/// (ℰ_n + E_m, |α_nm|²) at t = 0, sorted by energy, weights below 1e-12 dropped.
std::vector<SpectralLine> spectral_histogram(const TwoBodyState& s);

inline constexpr double kPairGapThreshold = 0.5;

struct RevivalReport {
  bool found = false;
  SpectralLine first, second;  // the dominant near-degenerate pair
  double delta = 0.0;          // energy gap, ħω
  double T_R = 0.0;            // 2π/Δ in natural time = 1/Δ trap periods
  std::optional<double> empirical;
};

/// Picks the pair of spectral lines with gap in (0, 0.5) and the largest
/// combined weight. `found` is false when no such pair exists (no revival).
RevivalReport revival_predictor(const TwoBodyState& s);

inline constexpr double kRevivalDipFraction = 0.8;

/// After the series first drops below 0.8 of its initial value, returns the
/// time of the maximum over the first later excursion back above that level.
std::optional<double> empirical_revival(const std::vector<double>& times, const std::vector<double>& occupation);

/// Samples a density on a coarser grid whose points are a subset of its own.
std::vector<double> sample_on(const MomentumDensity& n, const Grid1D& target);

struct DensityComparison {
  double time = 0.0;
  double l1_exact_gp = 0.0, linf_exact_gp = 0.0;
  double l1_gp_orbital = 0.0, linf_gp_orbital = 0.0;
  double l1_exact_orbital = 0.0, linf_exact_orbital = 0.0;
};

/// L¹ (∫|a-b| dk) and L∞ distances between the three densities on one grid.
DensityComparison compare_densities(const Grid1D& grid, const std::vector<double>& exact,
                                    const std::vector<double>& gp, const std::vector<double>& orbital1,
                                    double time = 0.0);

double pearson(const std::vector<double>& a, const std::vector<double>& b);

struct FrequencyPeak {
  double frequency = 0.0;  // cycles per trap period
  double power = 0.0;
};

/// Dominant frequency of a uniformly sampled series above min_frequency:
/// cubic trend removed, Hann window, eight-fold zero padding.
FrequencyPeak dominant_frequency(const std::vector<double>& series, double samples_per_period,
                                 double min_frequency = 0.5);

/// ⟨X²⟩ of the centre-of-mass coordinate (periodic in t with the trap period).
double center_of_mass_x2(const TwoBodyState& s);

}  // namespace twobody
