#pragma once

#include <complex>
#include <vector>

#include "twobody/initial_state.hpp"

namespace twobody {

using cplx = std::complex<double>;

/// Uniform grid in FFT layout: x_j = -x_max + j δx, j = 0..N-1, δx = 2 x_max / N.
/// Holds 0 at j = N/2; the sample at +x_max is the periodic image of j = 0.
struct Grid1D {
  int n = 0;
  double x_max = 0.0;

  Grid1D() = default;
  Grid1D(int n_points, double half_width);

  double step() const { return 2.0 * x_max / n; }
  double at(int j) const { return -x_max + j * step(); }
  /// Grid of the DFT-conjugate variable, k_max = π / δx.
  Grid1D conjugate() const;
  /// j with at(j) = -at(i) (the unpaired edge maps to itself).
  int mirror(int i) const { return i == 0 ? 0 : n - i; }
  bool operator==(const Grid1D& o) const { return n == o.n && x_max == o.x_max; }
};

/// ψ(k1, k2) on a momentum grid, row-major in k1. Unitary transform
/// convention: ψ = (2π)^{-1} ∫∫ e^{-i(k1 x1 + k2 x2)} Ψ dx1 dx2.
struct MomentumWavefunction {
  Grid1D grid;
  std::vector<cplx> values;
  double time = 0.0;

  cplx at(int i, int j) const { return values[static_cast<std::size_t>(i) * grid.n + j]; }
  double norm2() const;
};

/// Reduced one-particle density matrix on the momentum grid.
/// entries[i*N + j] = δk Σ_l conj ψ(k_i,k_l) ψ(k_j,k_l).
struct DensityMatrix {
  Grid1D grid;
  std::vector<cplx> entries;
  double time = 0.0;

  cplx at(int i, int j) const { return entries[static_cast<std::size_t>(i) * grid.n + j]; }
  /// n_Exact(k_i) = ρ(k_i, k_i).
  std::vector<double> diagonal() const;
  double trace() const;  // Σ ρ_ii δk
};

/// Eigenvalues of δk·ρ in descending order and the leading orbitals as
/// functions on the grid, ∫|f|² dk = 1, phase fixed so the largest-magnitude
/// component is real and positive.
struct NaturalOrbitalSet {
  Grid1D grid;
  double time = 0.0;
  std::vector<double> eigenvalues;
  std::vector<std::vector<cplx>> orbitals;

  std::vector<double> orbital_density(int c) const;
};

enum class Exec { kSerial, kParallel };

/// α(t) = α(t_s) exp(-i (ℰ_n + E_m) 2π (t - t_s)), t in trap periods.
TwoBodyState evolve_coefficients(const TwoBodyState& s, double t);

/// Evaluates ψ(k1, k2) directly in momentum space:
///   ψ = Σ α_nm (-i)^n χ_n(K) φ̃_m(κ),  K = (k1+k2)/√2, κ = (k1-k2)/√2,
/// with φ̃_m the cosine transform of the tabulated relative states. On a
/// uniform grid K depends only on i+j and κ on i-j, so basis functions are
/// cached once at 2N-1 points each.
class MomentumAssembler {
 public:
  MomentumAssembler(const EigenBasis& basis, Grid1D k_grid);

  const Grid1D& grid() const { return grid_; }
  MomentumWavefunction assemble(const TwoBodyState& s, Exec exec = Exec::kParallel) const;
  /// Largest |ψ| on the outermost grid rows, scaled by the peak; a support check.
  static double edge_fraction(const MomentumWavefunction& psi);

 private:
  Grid1D grid_;
  int n_cm_ = 0;
  int m_rel_ = 0;
  std::vector<cplx> cm_tab_;     // [n][s] = (-i)^n χ_n(K_s)
  std::vector<double> rel_tab_;  // [m][d] = φ̃_m(κ_d)
};

/// Convenience wrapper building a one-shot assembler.
MomentumWavefunction assemble_momentum_wavefunction(const TwoBodyState& s, const Grid1D& k_grid);

/// Ψ(x1, x2) on a position grid (cross-check path), row-major in x1.
std::vector<cplx> assemble_position_wavefunction(const TwoBodyState& s, const Grid1D& x_grid);

/// 2D DFT of position samples with continuum normalization, onto x_grid.conjugate().
MomentumWavefunction dft_momentum_wavefunction(const std::vector<cplx>& position, const Grid1D& x_grid);

DensityMatrix reduce_density_matrix(const MomentumWavefunction& psi, Exec exec = Exec::kParallel);

/// Full eigendecomposition; orbitals kept for the first n_orbitals.
NaturalOrbitalSet natural_orbitals(const DensityMatrix& rho, int n_orbitals = 8);

/// Fixes the global phase: the largest-magnitude component becomes real positive.
void fix_phase(std::vector<cplx>& v);

}  // namespace twobody
