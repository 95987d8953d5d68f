#pragma once

#include <vector>

#include "twobody/quadrature.hpp"

namespace twobody {

/// How the coupling g enters the relative-motion problem.
///
/// kEnergyCondition: energies solve Γ(-E/2+3/4)/Γ(-E/2+1/4) = -g/2 = 1/a0, the
/// relative Hamiltonian carries g δ(ξ). Reproduces the quoted revival times.
///
/// kHamiltonian: the relative Hamiltonian carries (g/√2) δ(ξ), which is what a
/// two-body term g δ(x1 - x2) becomes after ξ = (x1 - x2)/√2.
enum class CouplingConvention { kEnergyCondition, kHamiltonian };

struct TrapModel {
  double g = 0.0;
  CouplingConvention convention = CouplingConvention::kEnergyCondition;

  bool noninteracting() const { return g == 0.0; }
  /// Strength c of c δ(ξ) in the relative Hamiltonian.
  double relative_delta_strength() const;
  /// a0 = -2/g. Throws DomainError at g = 0.
  double scattering_length() const;
  /// Right-hand side of the energy condition, -c/2.
  double root_target() const { return -0.5 * relative_delta_strength(); }
};

inline constexpr double kMaxAbsCoupling = 5.0;

struct CMLevel {
  int n = 0;
  double energy = 0.5;
};

struct RelLevel {
  int m = 0;            // even label
  double energy = 0.5;  // E_m
  double nu = 0.0;      // (2E - 1)/4
  double norm = 0.0;    // N_m
};

struct BasisSize {
  int n_cm = 40;
  int m_rel = 40;
};

/// Truncated eigenbasis together with the half-line quadrature the relative
/// states are tabulated on. Immutable after build_basis.
struct EigenBasis {
  TrapModel model;
  std::vector<CMLevel> cm;
  std::vector<RelLevel> rel;

  double xi_max = 0.0;
  quad::Rule half_line;             // nodes in [0, xi_max]
  std::vector<double> rel_table;    // rel_table[j * nodes + i] = φ_{2j}(ξ_i)

  int n_cm() const { return static_cast<int>(cm.size()); }
  int m_rel() const { return static_cast<int>(rel.size()); }
  std::size_t nodes() const { return half_line.size(); }
  const double* rel_row(int j) const { return rel_table.data() + static_cast<std::size_t>(j) * nodes(); }
};

/// Lowest `count` even relative energies. Interacting models only.
std::vector<double> solve_relative_energies(const TrapModel& model, int count);

/// χ_n(X).
double eval_cm_state(int n, double X);

/// φ_m(ξ) = N_m U(-ν, 1/2, ξ²) e^{-ξ²/2}.
double eval_rel_state(const RelLevel& level, double xi);

/// Unnormalized shape U(-ν, 1/2, ξ²) e^{-ξ²/2}.
double rel_shape(double nu, double xi);

/// N_m with ∫ φ_m² dξ = 1 by composite Gauss–Legendre on the half line.
double compute_norm(const RelLevel& level);

/// Relative-sector integration range for energies up to e_max.
double relative_extent(double e_max);

/// Half-line composite rule used for relative-sector integrals.
quad::Rule relative_rule(double xi_max);

/// Builds levels and the tabulated relative states.
EigenBasis build_basis(const TrapModel& model, BasisSize size = {});

}  // namespace twobody
