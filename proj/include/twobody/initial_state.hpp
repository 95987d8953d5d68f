#pragma once

#include <complex>
#include <memory>
#include <vector>

#include "twobody/spectrum.hpp"

namespace twobody {

enum class CatSign { kSymmetric, kAntisymmetric };

/// Φ0(x) = N [e^{-(x-L)²/2} ± e^{-(x+L)²/2}].
struct CatSpec {
  double L = 0.0;
  CatSign sign = CatSign::kSymmetric;
  double norm = 0.0;  // filled by build_cat

  double sigma() const { return sign == CatSign::kSymmetric ? 1.0 : -1.0; }
  double value(double x) const;
  /// Unitary transform (2π)^{-1/2} ∫ e^{-ikx} Φ0(x) dx, closed form.
  std::complex<double> momentum(double k) const;
};

inline constexpr double kMaxDisplacement = 6.0;

/// Validates L and fills in N = [2√π (1 ± e^{-L²})]^{-1/2}.
CatSpec build_cat(double L, CatSign sign);

inline constexpr double kDefaultTruncationTolerance = 1e-4;

/// Coefficients α_{nm} over a shared eigenbasis. alpha is row-major in the
/// centre-of-mass index: alpha[n * m_rel + j] multiplies χ_n φ_{2j}.
///
/// The represented wavefunction is
///   Ψ(t) = Φ0⊗Φ0 + Σ (α_{nm}(t) - α_{nm}(0)) χ_n φ_m,
/// i.e. the part of the initial state outside the truncated basis is carried
/// along unevolved. Ψ(0) is then exactly the product state and the norm is 1
/// at all times; dropping the remainder instead would leave 1 - λ1 at the
/// size of the truncation loss already at t = 0.
struct TwoBodyState {
  std::shared_ptr<const EigenBasis> basis;
  CatSpec initial;
  std::vector<std::complex<double>> alpha;   // α(t), raw projections at t = 0
  std::vector<std::complex<double>> alpha0;  // α(0)
  double time = 0.0;     // trap periods
  double t0_norm = 0.0;  // Σ|α(0)|², completeness of the basis for this state

  int n_cm() const { return basis->n_cm(); }
  int m_rel() const { return basis->m_rel(); }
  std::complex<double> at(int n, int j) const { return alpha[static_cast<std::size_t>(n) * m_rel() + j]; }
  /// α(t) - α(0), the coefficients that multiply basis functions on top of Φ0⊗Φ0
  std::complex<double> delta(int n, int j) const {
    const std::size_t k = static_cast<std::size_t>(n) * m_rel() + j;
    return alpha[k] - alpha0[k];
  }
  /// Σ|α(t)|²
  double basis_weight() const;
  /// ‖Ψ(t)‖² = Σ|α(t)|² + 1 - t0_norm
  double norm2() const;
};

/// Projects Φ0(x1)Φ0(x2) onto the basis. The product splits into four
/// displaced Gaussians in (X, ξ), so every α is a sum of products of 1D
/// overlaps. Throws TruncationError when 1 - Σ|α|² exceeds tolerance.
TwoBodyState decompose(const CatSpec& cat, std::shared_ptr<const EigenBasis> basis,
                       double tolerance = kDefaultTruncationTolerance);

/// Ψ(x1, x2, t) pointwise (slow).
std::complex<double> evaluate_state(const TwoBodyState& s, double x1, double x2);

/// Σ α_{nm}(t) χ_n φ_m alone, the truncated expansion without the remainder.
std::complex<double> evaluate_projection(const TwoBodyState& s, double x1, double x2);

/// ∫ χ_n(X) e^{-(X-X0)²/2} dX for n = 0..count-1 by Gauss–Hermite.
std::vector<double> cm_gaussian_overlaps(int count, double X0);

/// ∫ φ_{2j}(ξ) e^{-(ξ-ξ0)²/2} dξ over the full line, from the tabulated states.
std::vector<double> rel_gaussian_overlaps(const EigenBasis& b, double xi0);

}  // namespace twobody
