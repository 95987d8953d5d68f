#include "twobody/initial_state.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "twobody/error.hpp"
#include "twobody/quadrature.hpp"
#include "twobody/specfun.hpp"

namespace twobody {

double CatSpec::value(double x) const {
  return norm * (std::exp(-0.5 * (x - L) * (x - L)) + sigma() * std::exp(-0.5 * (x + L) * (x + L)));
}

std::complex<double> CatSpec::momentum(double k) const {
  const double env = norm * std::exp(-0.5 * k * k);
  if (sign == CatSign::kSymmetric) return {2.0 * env * std::cos(k * L), 0.0};
  return {0.0, -2.0 * env * std::sin(k * L)};
}

CatSpec build_cat(double L, CatSign sign) {
  if (!std::isfinite(L) || L < 0.0 || L > kMaxDisplacement) {
    throw DomainError("cat displacement L must lie in [0, 6]");
  }
  CatSpec c;
  c.L = L;
  c.sign = sign;
  const double overlap = std::exp(-L * L);
  const double s = sign == CatSign::kSymmetric ? 1.0 + overlap : 1.0 - overlap;
  // also rejects L so small that the antisymmetric cat is numerically null
  if (s < 1e-8) throw DomainError("antisymmetric cat needs L > 0");
  c.norm = 1.0 / std::sqrt(2.0 * std::sqrt(std::numbers::pi) * s);
  return c;
}

double TwoBodyState::basis_weight() const {
  double s = 0.0;
  for (const auto& a : alpha) s += std::norm(a);
  return s;
}

double TwoBodyState::norm2() const { return basis_weight() + 1.0 - t0_norm; }

std::vector<double> cm_gaussian_overlaps(int count, double X0) {
  const int nodes = std::max(2 * count + 40, 2 * static_cast<int>(X0 * X0) + 60);
  const quad::Rule r = quad::gauss_hermite(std::min(nodes, 500));
  std::vector<double> out(count, 0.0);
  std::vector<double> h(count);
  for (std::size_t i = 0; i < r.size(); ++i) {
    const double x = r.nodes[i];
    const double g = std::exp(-0.5 * (x - X0) * (x - X0));
    if (g == 0.0) continue;
    specfun::hermite_functions(count, x, h.data());
    for (int n = 0; n < count; ++n) out[n] += r.weights[i] * h[n] * g;
  }
  return out;
}

std::vector<double> rel_gaussian_overlaps(const EigenBasis& b, double xi0) {
  std::vector<double> g(b.nodes());
  for (std::size_t i = 0; i < b.nodes(); ++i) {
    const double x = b.half_line.nodes[i];
    g[i] = b.half_line.weights[i] *
           (std::exp(-0.5 * (x - xi0) * (x - xi0)) + std::exp(-0.5 * (x + xi0) * (x + xi0)));
  }
  std::vector<double> out(b.m_rel(), 0.0);
  for (int j = 0; j < b.m_rel(); ++j) {
    const double* row = b.rel_row(j);
    double s = 0.0;
    for (std::size_t i = 0; i < b.nodes(); ++i) s += g[i] * row[i];
    out[j] = s;
  }
  return out;
}

TwoBodyState decompose(const CatSpec& cat, std::shared_ptr<const EigenBasis> basis, double tolerance) {
  if (!basis) throw DomainError("decompose: null basis");
  if (cat.norm <= 0.0) throw DomainError("decompose: cat not built");
  const EigenBasis& b = *basis;
  const int ncm = b.n_cm(), mrel = b.m_rel();
  const double L = cat.L;
  const double r2 = std::sqrt(2.0);

  // (X0, ξ0, sign) for the four Gaussian products; packets at (s1 L, s2 L)
  struct Term {
    double X0, xi0, weight;
  };
  std::vector<Term> terms;
  for (int s1 : {1, -1}) {
    for (int s2 : {1, -1}) {
      const double w = (s1 == 1 ? 1.0 : cat.sigma()) * (s2 == 1 ? 1.0 : cat.sigma());
      terms.push_back({(s1 + s2) * L / r2, (s1 - s2) * L / r2, w});
    }
  }

  TwoBodyState st;
  st.basis = basis;
  st.initial = cat;
  st.alpha.assign(static_cast<std::size_t>(ncm) * mrel, {0.0, 0.0});
  const double nn = cat.norm * cat.norm;
  for (const Term& t : terms) {
    const std::vector<double> A = cm_gaussian_overlaps(ncm, t.X0);
    const std::vector<double> B = rel_gaussian_overlaps(b, t.xi0);
    for (int n = 0; n < ncm; ++n) {
      for (int j = 0; j < mrel; ++j) st.alpha[static_cast<std::size_t>(n) * mrel + j] += nn * t.weight * A[n] * B[j];
    }
  }
  st.t0_norm = st.basis_weight();
  if (1.0 - st.t0_norm > tolerance) {
    throw TruncationError("decomposition completeness " + std::to_string(st.t0_norm) + " leaves " +
                          std::to_string(1.0 - st.t0_norm) + " outside the basis (tolerance " +
                          std::to_string(tolerance) + "); raise n_cm / m_rel");
  }
  st.alpha0 = st.alpha;
  return st;
}

namespace {
std::complex<double> expand(const TwoBodyState& s, double x1, double x2, bool remainder) {
  const EigenBasis& b = *s.basis;
  const double X = (x1 + x2) / std::sqrt(2.0);
  const double xi = (x1 - x2) / std::sqrt(2.0);
  std::vector<double> h(b.n_cm());
  specfun::hermite_functions(b.n_cm(), X, h.data());
  std::vector<double> phi(b.m_rel());
  for (int j = 0; j < b.m_rel(); ++j) phi[j] = eval_rel_state(b.rel[j], xi);
  std::complex<double> v = remainder ? s.initial.value(x1) * s.initial.value(x2) : 0.0;
  for (int n = 0; n < b.n_cm(); ++n) {
    for (int j = 0; j < b.m_rel(); ++j) v += (remainder ? s.delta(n, j) : s.at(n, j)) * h[n] * phi[j];
  }
  return v;
}
}  // namespace

std::complex<double> evaluate_state(const TwoBodyState& s, double x1, double x2) { return expand(s, x1, x2, true); }

std::complex<double> evaluate_projection(const TwoBodyState& s, double x1, double x2) {
  return expand(s, x1, x2, false);
}

}  // namespace twobody
