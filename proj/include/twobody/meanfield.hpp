#pragma once

#include <complex>
#include <memory>
#include <numbers>
#include <vector>

#include "twobody/evolution.hpp"
#include "twobody/fourier.hpp"

namespace twobody {

struct GPParams {
  int n_points = 1024;
  double dx = 0.05;
  double dt = std::numbers::pi / 4.0 * 1e-3;  // natural units, 8000 steps per period
};

/// Φ(x, t) on the position grid; time in trap periods.
struct GPField {
  Grid1D grid;
  std::vector<cplx> values;
  double time = 0.0;

  double norm2() const;
};

/// Momentum density on a grid conjugate to the field's position grid.
struct MomentumDensity {
  Grid1D grid;
  std::vector<double> values;
  double time = 0.0;

  double integral() const;
};

/// Strang split-operator propagator for
///   i ∂t Φ = (-½ ∂x² + ½ x² + g |Φ|²) Φ
/// ordered kinetic/2, potential + nonlinear, kinetic/2. Consecutive kinetic
/// halves are fused inside advance().
class GPSolver {
 public:
  GPSolver(double g, GPParams params = {}, Exec exec = Exec::kParallel);

  const Grid1D& grid() const { return grid_; }
  const GPParams& params() const { return params_; }
  double coupling() const { return g_; }

  GPField initial(const CatSpec& cat) const;
  /// One full Strang step of size params().dt.
  void step(GPField& f) const;
  /// `steps` Strang steps of size h.
  void advance(GPField& f, long steps, double h) const;
  /// Propagates to time t (periods). The interval is split into
  /// ceil(Δ/dt) equal steps, so the step never exceeds dt.
  void advance_to(GPField& f, double t) const;

  double energy(const GPField& f) const;
  MomentumDensity momentum_density(const GPField& f) const;

 private:
  void kinetic(cplx* data, const std::vector<cplx>& factor) const;
  std::vector<cplx> kinetic_factor(double h) const;

  double g_;
  GPParams params_;
  Exec exec_;
  Grid1D grid_;
  std::vector<double> potential_;
  std::vector<double> k2_;  // k² in FFT index order
  std::shared_ptr<fourier::Plan1D> plan_;
};

double gp_energy(const GPSolver& solver, const GPField& f);
MomentumDensity gp_momentum_density(const GPSolver& solver, const GPField& f);

}  // namespace twobody
