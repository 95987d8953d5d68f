#include "twobody/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "twobody/error.hpp"
#include "twobody/fourier.hpp"
#include "twobody/kernels.hpp"
#include "twobody/linalg.hpp"
#include "twobody/specfun.hpp"

namespace twobody {

namespace {
constexpr double kPi = std::numbers::pi;
const double kSqrt2 = std::sqrt(2.0);
}  // namespace

Grid1D::Grid1D(int n_points, double half_width) : n(n_points), x_max(half_width) {
  if (n_points < 2 || n_points % 2 != 0) throw DomainError("Grid1D: point count must be even and >= 2");
  if (!(half_width > 0.0)) throw DomainError("Grid1D: half width must be positive");
}

Grid1D Grid1D::conjugate() const { return Grid1D(n, kPi / step()); }

double MomentumWavefunction::norm2() const {
  double s = 0.0;
  for (const cplx& v : values) s += std::norm(v);
  const double dk = grid.step();
  return s * dk * dk;
}

std::vector<double> DensityMatrix::diagonal() const {
  std::vector<double> d(grid.n);
  for (int i = 0; i < grid.n; ++i) d[i] = at(i, i).real();
  return d;
}

double DensityMatrix::trace() const {
  double s = 0.0;
  for (int i = 0; i < grid.n; ++i) s += at(i, i).real();
  return s * grid.step();
}

std::vector<double> NaturalOrbitalSet::orbital_density(int c) const {
  std::vector<double> d(orbitals.at(c).size());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = std::norm(orbitals[c][i]);
  return d;
}

TwoBodyState evolve_coefficients(const TwoBodyState& s, double t) {
  if (!(t >= 0.0)) throw DomainError("evolve_coefficients: negative time");
  TwoBodyState out = s;
  out.time = t;
  const double dt = t - s.time;
  if (dt == 0.0) return out;
  const EigenBasis& b = *s.basis;
  for (int n = 0; n < b.n_cm(); ++n) {
    for (int j = 0; j < b.m_rel(); ++j) {
      // reduce the phase in cycles before scaling by 2π
      const double cycles = std::fmod((b.cm[n].energy + b.rel[j].energy) * dt, 1.0);
      const double arg = -2.0 * kPi * cycles;
      out.alpha[static_cast<std::size_t>(n) * b.m_rel() + j] *= cplx(std::cos(arg), std::sin(arg));
    }
  }
  return out;
}

MomentumAssembler::MomentumAssembler(const EigenBasis& basis, Grid1D k_grid)
    : grid_(k_grid), n_cm_(basis.n_cm()), m_rel_(basis.m_rel()) {
  const int N = grid_.n;
  const std::size_t len = 2 * static_cast<std::size_t>(N) - 1;
  const double dk = grid_.step();

  cm_tab_.assign(static_cast<std::size_t>(n_cm_) * len, 0.0);
  std::vector<double> h(n_cm_);
  const cplx minus_i(0.0, -1.0);
  for (std::size_t s = 0; s < len; ++s) {
    const double K = (-2.0 * grid_.x_max + static_cast<double>(s) * dk) / kSqrt2;
    specfun::hermite_functions(n_cm_, K, h.data());
    cplx ph = 1.0;
    for (int n = 0; n < n_cm_; ++n) {
      cm_tab_[n * len + s] = ph * h[n];
      ph *= minus_i;
    }
  }

  // φ̃(κ) = √(2/π) ∫_0^∞ cos(κξ) φ(ξ) dξ; even in κ, so fill d >= N-1 and mirror
  rel_tab_.assign(static_cast<std::size_t>(m_rel_) * len, 0.0);
  const std::size_t nodes = basis.nodes();
  const double pref = std::sqrt(2.0 / kPi);
  std::vector<double> wphi(static_cast<std::size_t>(m_rel_) * nodes);
  for (int j = 0; j < m_rel_; ++j)
    for (std::size_t i = 0; i < nodes; ++i) wphi[j * nodes + i] = pref * basis.half_line.weights[i] * basis.rel_row(j)[i];
  #pragma omp parallel
  {
    std::vector<double> c(nodes);
    #pragma omp for schedule(static)
    for (int d = N - 1; d < static_cast<int>(len); ++d) {
      const double kappa = (d - (N - 1)) * dk / kSqrt2;
      for (std::size_t i = 0; i < nodes; ++i) c[i] = std::cos(kappa * basis.half_line.nodes[i]);
      for (int j = 0; j < m_rel_; ++j) {
        const double* w = &wphi[j * nodes];
        double acc = 0.0;
        for (std::size_t i = 0; i < nodes; ++i) acc += w[i] * c[i];
        rel_tab_[j * len + d] = acc;
        rel_tab_[j * len + (2 * (N - 1) - d)] = acc;
      }
    }
  }
}

MomentumWavefunction MomentumAssembler::assemble(const TwoBodyState& s, Exec exec) const {
  if (s.n_cm() != n_cm_ || s.m_rel() != m_rel_) throw DomainError("MomentumAssembler: basis size mismatch");
  const int N = grid_.n;
  const std::size_t len = 2 * static_cast<std::size_t>(N) - 1;

  // only centre-of-mass rows that moved away from α(0) enter the pair sum
  std::vector<int> active;
  for (int n = 0; n < n_cm_; ++n) {
    bool any = false;
    for (int j = 0; j < m_rel_ && !any; ++j) any = s.delta(n, j) != cplx(0.0, 0.0);
    if (any) active.push_back(n);
  }
  const int terms = static_cast<int>(active.size());
  std::vector<cplx> sum_tab(terms * len), diff_tab(terms * len, 0.0);
  for (int t = 0; t < terms; ++t) {
    const int n = active[t];
    std::copy_n(cm_tab_.begin() + n * len, len, sum_tab.begin() + t * len);
    cplx* out = diff_tab.data() + t * len;
    for (int j = 0; j < m_rel_; ++j) {
      const cplx a = s.delta(n, j);
      const double* r = rel_tab_.data() + j * len;
      for (std::size_t d = 0; d < len; ++d) out[d] += a * r[d];
    }
  }

  MomentumWavefunction psi;
  psi.grid = grid_;
  psi.time = s.time;
  psi.values.assign(static_cast<std::size_t>(N) * N, 0.0);
  if (terms > 0) {
    if (exec == Exec::kParallel) {
      kernels::pair_sum_parallel(N, terms, sum_tab.data(), diff_tab.data(), psi.values.data());
    } else {
      kernels::pair_sum_serial(N, terms, sum_tab.data(), diff_tab.data(), psi.values.data());
    }
  }
  std::vector<cplx> c(N);
  for (int i = 0; i < N; ++i) c[i] = s.initial.momentum(grid_.at(i));
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) psi.values[static_cast<std::size_t>(i) * N + j] += c[i] * c[j];
  return psi;
}

double MomentumAssembler::edge_fraction(const MomentumWavefunction& psi) {
  const int N = psi.grid.n;
  double peak = 0.0, edge = 0.0;
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) {
      const double a = std::abs(psi.at(i, j));
      peak = std::max(peak, a);
      if (i == 0 || j == 0 || i == N - 1 || j == N - 1) edge = std::max(edge, a);
    }
  }
  return peak > 0.0 ? edge / peak : 0.0;
}

MomentumWavefunction assemble_momentum_wavefunction(const TwoBodyState& s, const Grid1D& k_grid) {
  return MomentumAssembler(*s.basis, k_grid).assemble(s);
}

std::vector<cplx> assemble_position_wavefunction(const TwoBodyState& s, const Grid1D& x_grid) {
  const EigenBasis& b = *s.basis;
  const int N = x_grid.n;
  const std::size_t len = 2 * static_cast<std::size_t>(N) - 1;
  const double dx = x_grid.step();
  std::vector<cplx> sum_tab(static_cast<std::size_t>(b.n_cm()) * len);
  std::vector<double> h(b.n_cm());
  for (std::size_t q = 0; q < len; ++q) {
    const double X = (-2.0 * x_grid.x_max + static_cast<double>(q) * dx) / kSqrt2;
    specfun::hermite_functions(b.n_cm(), X, h.data());
    for (int n = 0; n < b.n_cm(); ++n) sum_tab[n * len + q] = h[n];
  }
  std::vector<double> phi(static_cast<std::size_t>(b.m_rel()) * len);
  for (std::size_t d = 0; d < len; ++d) {
    const double xi = (static_cast<double>(d) - (N - 1)) * dx / kSqrt2;
    for (int j = 0; j < b.m_rel(); ++j) phi[j * len + d] = eval_rel_state(b.rel[j], xi);
  }
  std::vector<cplx> diff_tab(static_cast<std::size_t>(b.n_cm()) * len, 0.0);
  for (int n = 0; n < b.n_cm(); ++n)
    for (int j = 0; j < b.m_rel(); ++j)
      for (std::size_t d = 0; d < len; ++d) diff_tab[n * len + d] += s.delta(n, j) * phi[j * len + d];
  std::vector<cplx> out(static_cast<std::size_t>(N) * N);
  kernels::pair_sum_parallel(N, b.n_cm(), sum_tab.data(), diff_tab.data(), out.data());
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      out[static_cast<std::size_t>(i) * N + j] += s.initial.value(x_grid.at(i)) * s.initial.value(x_grid.at(j));
  return out;
}

MomentumWavefunction dft_momentum_wavefunction(const std::vector<cplx>& position, const Grid1D& x_grid) {
  const int N = x_grid.n;
  if (position.size() != static_cast<std::size_t>(N) * N) throw GridError("dft: sample count does not match grid");
  const Grid1D kg = x_grid.conjugate();
  const double x0 = -x_grid.x_max, k0 = -kg.x_max, dx = x_grid.step(), dk = kg.step();
  // Σ_j e^{-i k_p x_j} f_j = e^{-i k0 x0} e^{-i p dk x0} FFT[e^{-i k0 j dx} f_j]_p
  std::vector<cplx> pre(N), post(N);
  for (int j = 0; j < N; ++j) pre[j] = std::polar(1.0, -k0 * j * dx);
  for (int p = 0; p < N; ++p) post[p] = std::polar(1.0, -k0 * x0 - p * dk * x0);
  MomentumWavefunction psi;
  psi.grid = kg;
  psi.values = position;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) psi.values[static_cast<std::size_t>(i) * N + j] *= pre[i] * pre[j];
  const fourier::Plan2D plan(N);
  plan.forward(psi.values.data());
  const double scale = dx * dx / (2.0 * kPi);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) psi.values[static_cast<std::size_t>(i) * N + j] *= scale * post[i] * post[j];
  return psi;
}

DensityMatrix reduce_density_matrix(const MomentumWavefunction& psi, Exec exec) {
  const int N = psi.grid.n;
  DensityMatrix rho;
  rho.grid = psi.grid;
  rho.time = psi.time;
  rho.entries.assign(static_cast<std::size_t>(N) * N, 0.0);
  if (exec == Exec::kParallel) {
    kernels::gram_parallel(N, psi.values.data(), psi.grid.step(), rho.entries.data());
  } else {
    kernels::gram_serial(N, psi.values.data(), psi.grid.step(), rho.entries.data());
  }
  return rho;
}

void fix_phase(std::vector<cplx>& v) {
  if (v.empty()) return;
  // parity makes ties common; take the first index within 1e-9 of the peak
  double peak = 0.0;
  for (const cplx& x : v) peak = std::max(peak, std::abs(x));
  if (peak == 0.0) return;
  std::size_t best = 0;
  while (std::abs(v[best]) < peak * (1.0 - 1e-9)) ++best;
  const cplx ph = std::conj(v[best]) / std::abs(v[best]);
  for (cplx& x : v) x *= ph;
  v[best] = std::abs(v[best]);
}

NaturalOrbitalSet natural_orbitals(const DensityMatrix& rho, int n_orbitals) {
  const int N = rho.grid.n;
  const double dk = rho.grid.step();
  n_orbitals = std::clamp(n_orbitals, 0, N);
  std::vector<cplx> w(rho.entries.size());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = dk * rho.entries[i];
  const linalg::HermitianEigen ev = linalg::hermitian_eigen(w, N, n_orbitals);
  NaturalOrbitalSet out;
  out.grid = rho.grid;
  out.time = rho.time;
  out.eigenvalues = ev.values;
  const double inv = 1.0 / std::sqrt(dk);
  for (int c = 0; c < n_orbitals; ++c) {
    std::vector<cplx> f(ev.vector(c), ev.vector(c) + N);
    for (cplx& x : f) x *= inv;
    fix_phase(f);
    out.orbitals.push_back(std::move(f));
  }
  return out;
}

}  // namespace twobody
