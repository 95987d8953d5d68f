#include "twobody/meanfield.hpp"

#include <cmath>

#include "twobody/error.hpp"
#include "twobody/kernels.hpp"

namespace twobody {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

double GPField::norm2() const {
  double s = 0.0;
  for (const cplx& v : values) s += std::norm(v);
  return s * grid.step();
}

double MomentumDensity::integral() const {
  double s = 0.0;
  for (double v : values) s += v;
  return s * grid.step();
}

GPSolver::GPSolver(double g, GPParams params, Exec exec)
    : g_(g), params_(params), exec_(exec), grid_(params.n_points, 0.5 * params.n_points * params.dx) {
  if (!std::isfinite(g)) throw DomainError("GPSolver: non-finite coupling");
  if (!(params.dt > 0.0)) throw DomainError("GPSolver: dt must be positive");
  const int n = grid_.n;
  potential_.resize(n);
  for (int j = 0; j < n; ++j) potential_[j] = 0.5 * grid_.at(j) * grid_.at(j);
  k2_.resize(n);
  const double dk = kTwoPi / (n * params.dx);
  for (int p = 0; p < n; ++p) {
    const double k = (p < n / 2 ? p : p - n) * dk;
    k2_[p] = k * k;
  }
  plan_ = std::make_shared<fourier::Plan1D>(n);
}

GPField GPSolver::initial(const CatSpec& cat) const {
  GPField f;
  f.grid = grid_;
  f.values.resize(grid_.n);
  for (int j = 0; j < grid_.n; ++j) f.values[j] = cat.value(grid_.at(j));
  return f;
}

std::vector<cplx> GPSolver::kinetic_factor(double h) const {
  // includes the 1/N of the inverse transform
  std::vector<cplx> f(grid_.n);
  const double inv_n = 1.0 / grid_.n;
  for (int p = 0; p < grid_.n; ++p) f[p] = std::polar(inv_n, -0.5 * k2_[p] * h);
  return f;
}

void GPSolver::kinetic(cplx* data, const std::vector<cplx>& factor) const {
  plan_->forward(data);
  if (exec_ == Exec::kParallel) {
    kernels::multiply_parallel(grid_.n, factor.data(), data);
  } else {
    kernels::multiply_serial(grid_.n, factor.data(), data);
  }
  plan_->inverse(data);
}

void GPSolver::advance(GPField& f, long steps, double h) const {
  if (!(f.grid == grid_)) throw GridError("GPSolver: field grid mismatch");
  if (steps <= 0) return;
  const std::vector<cplx> half = kinetic_factor(0.5 * h);
  const std::vector<cplx> full = kinetic_factor(h);
  cplx* d = f.values.data();
  kinetic(d, half);
  for (long s = 0; s < steps; ++s) {
    if (exec_ == Exec::kParallel) {
      kernels::potential_phase_parallel(grid_.n, potential_.data(), g_, h, d);
    } else {
      kernels::potential_phase_serial(grid_.n, potential_.data(), g_, h, d);
    }
    kinetic(d, s + 1 < steps ? full : half);
  }
  f.time += steps * h / kTwoPi;
}

void GPSolver::step(GPField& f) const { advance(f, 1, params_.dt); }

void GPSolver::advance_to(GPField& f, double t) const {
  const double span = (t - f.time) * kTwoPi;
  if (span < -1e-12) throw DomainError("GPSolver: cannot propagate backwards");
  if (span <= 1e-12) return;
  const long steps = static_cast<long>(std::ceil(span / params_.dt - 1e-9));
  advance(f, steps, span / steps);
  f.time = t;
}

double GPSolver::energy(const GPField& f) const {
  const int n = grid_.n;
  std::vector<cplx> hat = f.values;
  plan_->forward(hat.data());
  double kin = 0.0;
  for (int p = 0; p < n; ++p) kin += k2_[p] * std::norm(hat[p]);
  kin *= 0.5 * params_.dx / n;
  double pot = 0.0;
  for (int j = 0; j < n; ++j) {
    const double r = std::norm(f.values[j]);
    pot += (potential_[j] + 0.5 * g_ * r) * r;
  }
  return kin + pot * params_.dx;
}

MomentumDensity GPSolver::momentum_density(const GPField& f) const {
  const int n = grid_.n;
  const Grid1D kg = grid_.conjugate();
  const double k0 = -kg.x_max;
  std::vector<cplx> w(n);
  for (int j = 0; j < n; ++j) w[j] = f.values[j] * std::polar(1.0, -k0 * j * params_.dx);
  plan_->forward(w.data());
  MomentumDensity out;
  out.grid = kg;
  out.time = f.time;
  out.values.resize(n);
  // the output phases e^{-i k0 x0} e^{-i p δk x0} drop out of |φ|²
  const double scale = params_.dx * params_.dx / kTwoPi;
  for (int p = 0; p < n; ++p) out.values[p] = scale * std::norm(w[p]);
  return out;
}

double gp_energy(const GPSolver& solver, const GPField& f) { return solver.energy(f); }

MomentumDensity gp_momentum_density(const GPSolver& solver, const GPField& f) { return solver.momentum_density(f); }

}  // namespace twobody
