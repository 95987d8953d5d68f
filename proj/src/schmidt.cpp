#include "twobody/schmidt.hpp"

#include <cmath>
#include <string>

#include "twobody/error.hpp"
#include "twobody/linalg.hpp"
#include "twobody/specfun.hpp"

namespace twobody {

namespace {
using cplx = std::complex<double>;
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

// (a1† ± a2†)/√2 on a shell vector v[a], b = s - a; result lives on shell s + 1
std::vector<double> raise(const std::vector<double>& v, double sign) {
  const int s = static_cast<int>(v.size()) - 1;
  std::vector<double> out(s + 2, 0.0);
  for (int a = 0; a <= s; ++a) {
    out[a + 1] += std::sqrt(a + 1.0) * v[a];
    out[a] += sign * std::sqrt(s - a + 1.0) * v[a];
  }
  for (double& x : out) x *= kInvSqrt2;
  return out;
}
}  // namespace

SchmidtOracle::SchmidtOracle(const EigenBasis& basis, int order)
    : order_(order), n_cm_(basis.n_cm()), m_rel_(basis.m_rel()), q_count_(2 * order - 1) {
  if (order < 2) throw DomainError("SchmidtOracle: order must be >= 2");

  // Hermite coefficients of the even relative states; odd q vanish by parity
  rel_hermite_.assign(static_cast<std::size_t>(q_count_) * m_rel_, 0.0);
  std::vector<double> h(q_count_);
  for (std::size_t i = 0; i < basis.nodes(); ++i) {
    const double xi = basis.half_line.nodes[i];
    const double w = 2.0 * basis.half_line.weights[i];
    specfun::hermite_functions(q_count_, xi, h.data());
    for (int q = 0; q < q_count_; q += 2)
      for (int j = 0; j < m_rel_; ++j) rel_hermite_[q * m_rel_ + j] += w * h[q] * basis.rel_row(j)[i];
  }

  // brackets <h_a h_b | χ_n h_q> for even q
  offset_.assign(static_cast<std::size_t>(n_cm_) * q_count_, 0);
  std::vector<double> cm{1.0};
  for (int n = 0; n < n_cm_; ++n) {
    if (n > 0) {
      cm = raise(cm, 1.0);
      for (double& x : cm) x /= std::sqrt(static_cast<double>(n));
    }
    std::vector<double> v = cm;
    for (int q = 0; q < q_count_; ++q) {
      if (q > 0) {
        v = raise(v, -1.0);
        for (double& x : v) x /= std::sqrt(static_cast<double>(q));
      }
      if (q % 2 == 0) {
        offset_[n * q_count_ + q] = brackets_.size();
        brackets_.insert(brackets_.end(), v.begin(), v.end());
      }
    }
  }
}

std::vector<cplx> SchmidtOracle::coefficients(const TwoBodyState& s) const {
  if (s.n_cm() != n_cm_ || s.m_rel() != m_rel_) throw DomainError("SchmidtOracle: basis size mismatch");
  const int A = order_;
  std::vector<cplx> C(static_cast<std::size_t>(A) * A, 0.0);

  // the unevolved remainder, Φ0 ⊗ Φ0
  const std::vector<double> o = cm_gaussian_overlaps(A, s.initial.L);
  std::vector<double> c(A);
  for (int a = 0; a < A; ++a) c[a] = s.initial.norm * o[a] * (1.0 + s.initial.sigma() * (a % 2 == 0 ? 1.0 : -1.0));
  for (int a = 0; a < A; ++a)
    for (int b = 0; b < A; ++b) C[a * A + b] = c[a] * c[b];

  for (int n = 0; n < n_cm_; ++n) {
    bool any = false;
    for (int j = 0; j < m_rel_ && !any; ++j) any = s.delta(n, j) != cplx(0.0, 0.0);
    if (!any) continue;
    for (int q = 0; q < q_count_; q += 2) {
      const int shell = n + q;
      if (shell > 2 * A - 2) break;
      cplx w = 0.0;
      for (int j = 0; j < m_rel_; ++j) w += s.delta(n, j) * rel_hermite_[q * m_rel_ + j];
      const double* v = &brackets_[offset_[n * q_count_ + q]];
      const int lo = std::max(0, shell - A + 1), hi = std::min(shell, A - 1);
      for (int a = lo; a <= hi; ++a) C[a * A + (shell - a)] += w * v[a];
    }
  }
  return C;
}

SchmidtWeights SchmidtOracle::weights(const TwoBodyState& s) const {
  const std::vector<double> sv = linalg::singular_values(coefficients(s), order_, order_);
  SchmidtWeights out;
  for (double x : sv) {
    out.weights.push_back(x * x);
    out.captured += x * x;
  }
  return out;
}

SchmidtWeights schmidt_via_basis(const TwoBodyState& s, int order, double tolerance) {
  SchmidtWeights w = SchmidtOracle(*s.basis, order).weights(s);
  if (1.0 - w.captured > tolerance) {
    throw TruncationError("harmonic product basis of order " + std::to_string(order) + " captures only " +
                          std::to_string(w.captured));
  }
  return w;
}

}  // namespace twobody
