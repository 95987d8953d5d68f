#pragma once

#include <vector>

#include "twobody/initial_state.hpp"

namespace twobody {

inline constexpr int kDefaultSchmidtOrder = 80;

struct SchmidtWeights {
  std::vector<double> weights;  // squared singular values, descending
  double captured = 0.0;        // Σ weights, the part of Ψ inside the box a, b < order
};

/// Schmidt weights from the product oscillator basis h_a(x1) h_b(x2), a, b < order.
/// χ_n(X) h_q(ξ) maps onto the a + b = n + q shell through 45° rotation
/// brackets built with ladder operators; φ_m enters through its Hermite
/// coefficients R_qm. Independent of any momentum grid.
class SchmidtOracle {
 public:
  SchmidtOracle(const EigenBasis& basis, int order = kDefaultSchmidtOrder);

  int order() const { return order_; }
  /// C_ab for the state; row-major order × order.
  std::vector<std::complex<double>> coefficients(const TwoBodyState& s) const;
  SchmidtWeights weights(const TwoBodyState& s) const;

 private:
  int order_;
  int n_cm_, m_rel_, q_count_;
  std::vector<double> rel_hermite_;  // [q * m_rel + j] = ∫ h_q φ_{2j} dξ
  std::vector<double> brackets_;     // per (n, q) shell: coefficients over a = 0..n+q
  std::vector<std::size_t> offset_;  // start of shell (n, q) in brackets_
};

/// Convenience wrapper. Throws TruncationError when 1 - captured > tolerance.
SchmidtWeights schmidt_via_basis(const TwoBodyState& s, int order = kDefaultSchmidtOrder,
                                 double tolerance = kDefaultTruncationTolerance);

}  // namespace twobody
