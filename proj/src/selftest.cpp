#include "twobody/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>

#include "twobody/analysis.hpp"
#include "twobody/error.hpp"
#include "twobody/quadrature.hpp"
#include "twobody/schmidt.hpp"
#include "twobody/specfun.hpp"

namespace twobody {

namespace {

std::string sci(const char* label, double x) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%s %.3e", label, x);
  return buf;
}

SelftestCheck specfun_identities() {
  double worst = 0.0;
  double fact = 1.0;
  for (int n = 1; n <= 15; ++n) {
    fact *= n;
    worst = std::max(worst, std::fabs(specfun::gamma(n + 1.0) / fact - 1.0));
  }
  for (double x : {0.1, 0.37, 0.5, 0.83}) {
    const double refl = specfun::gamma(x) * specfun::gamma(1.0 - x) * std::sin(std::numbers::pi * x) / std::numbers::pi;
    worst = std::max(worst, std::fabs(refl - 1.0));
  }
  // U(-3, 1/2, x²) = H_6(x) / 2^6
  for (double x : {0.3, 1.1, 2.7}) {
    const double h = specfun::hermite(6, x) / 64.0;
    worst = std::max(worst, std::fabs(specfun::tricomi_u_half(-3.0, x * x) - h) / std::max(1.0, std::fabs(h)));
  }
  // Hermite-function orthonormality (weights come pre-scaled by e^{x²})
  const quad::Rule r = quad::gauss_hermite(80);
  std::vector<double> h(30 * r.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::vector<double> v(30);
    specfun::hermite_functions(30, r.nodes[i], v.data());
    for (int n = 0; n < 30; ++n) h[n * r.size() + i] = v[n];
  }
  for (int a = 0; a < 30; ++a) {
    for (int b = 0; b <= a; ++b) {
      double s = 0.0;
      for (std::size_t i = 0; i < r.size(); ++i) s += r.weights[i] * h[a * r.size() + i] * h[b * r.size() + i];
      worst = std::max(worst, std::fabs(s - (a == b ? 1.0 : 0.0)));
    }
  }
  return {"specfun identities", worst <= 1e-10, sci("worst relative deviation", worst)};
}

SelftestCheck orthonormality(const EigenBasis& b) {
  double worst = 0.0;
  for (int a = 0; a < b.m_rel(); ++a) {
    for (int c = 0; c <= a; ++c) {
      double s = 0.0;
      for (std::size_t i = 0; i < b.nodes(); ++i) s += b.half_line.weights[i] * b.rel_row(a)[i] * b.rel_row(c)[i];
      worst = std::max(worst, std::fabs(2.0 * s - (a == c ? 1.0 : 0.0)));
    }
  }
  return {"relative-state orthonormality (g = -0.2)", worst <= 1e-7, sci("max |<phi_i|phi_j> - delta_ij|", worst)};
}

const Grid1D& k_grid() {
  static const Grid1D g = Grid1D(256, 12.8).conjugate();
  return g;
}

SelftestCheck separability() {
  const auto basis = std::make_shared<const EigenBasis>(build_basis(TrapModel{0.0}));
  const TwoBodyState s = decompose(build_cat(3.0, CatSign::kSymmetric), basis);
  double worst = 0.0;
  for (double t : {0.0, 1.3, 2.71}) {
    const NaturalOrbitalSet no =
        natural_orbitals(reduce_density_matrix(assemble_momentum_wavefunction(evolve_coefficients(s, t), k_grid())), 1);
    worst = std::max(worst, std::fabs(1.0 - no.eigenvalues[0]));
  }
  return {"g = 0 separability (L = 3)", worst <= 1e-6, sci("max |1 - lambda_1|", worst)};
}

SelftestCheck dual_method(const std::shared_ptr<const EigenBasis>& basis) {
  const TwoBodyState s = decompose(build_cat(3.0, CatSign::kSymmetric), basis);
  const SchmidtOracle oracle(*basis);
  double worst = 0.0;
  for (double t : {1.7, 4.9}) {
    const TwoBodyState st = evolve_coefficients(s, t);
    const NaturalOrbitalSet no = natural_orbitals(reduce_density_matrix(assemble_momentum_wavefunction(st, k_grid())), 1);
    const SchmidtWeights w = oracle.weights(st);
    for (int q = 0; q < 10; ++q) worst = std::max(worst, std::fabs(w.weights[q] - no.eigenvalues[q]));
  }
  return {"grid vs harmonic-basis spectrum (g = -0.2, L = 3)", worst <= 1e-6, sci("max eigenvalue difference", worst)};
}

SelftestCheck gp_order() {
  const CatSpec cat = build_cat(3.0, CatSign::kSymmetric);
  std::vector<std::vector<cplx>> runs;
  for (double scale : {1.0, 0.5, 0.25}) {
    GPParams p;
    p.dt *= scale;
    const GPSolver solver(-0.2, p);
    GPField f = solver.initial(cat);
    solver.advance_to(f, 1.0);
    runs.push_back(f.values);
  }
  const auto diff = [](const std::vector<cplx>& a, const std::vector<cplx>& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return d;
  };
  const double order = std::log2(diff(runs[0], runs[1]) / diff(runs[1], runs[2]));
  char buf[64];
  std::snprintf(buf, sizeof buf, "observed order %.3f", order);
  return {"GP Strang convergence order", std::fabs(order - 2.0) <= 0.2, buf};
}

SelftestCheck truncation_abort() {
  BasisSize small;
  small.n_cm = 4;
  const auto basis = std::make_shared<const EigenBasis>(build_basis(TrapModel{-0.2}, small));
  try {
    decompose(build_cat(3.0, CatSign::kSymmetric), basis);
  } catch (const TruncationError& e) {
    return {"completeness abort with N_cm = 4, L = 3", true, std::string("aborted: ") + e.what()};
  }
  return {"completeness abort with N_cm = 4, L = 3", false, "no abort raised"};
}

}  // namespace

bool SelftestReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const SelftestCheck& c) { return c.passed; });
}

SelftestReport selftest(const SelftestOptions& opt, std::ostream* log) {
  SelftestReport rep;
  const auto record = [&](SelftestCheck c) {
    if (log) *log << (c.passed ? "PASS  " : "FAIL  ") << c.name << ": " << c.detail << "\n" << std::flush;
    rep.checks.push_back(std::move(c));
  };
  record(specfun_identities());

  const auto basis = std::make_shared<const EigenBasis>(build_basis(TrapModel{-0.2}));
  if (opt.corrupt_normalization) {
    EigenBasis bad = *basis;
    const int j = std::min(3, bad.m_rel() - 1);
    bad.rel[j].norm *= 1.01;
    for (std::size_t i = 0; i < bad.nodes(); ++i) bad.rel_table[j * bad.nodes() + i] *= 1.01;
    record(orthonormality(bad));
  } else {
    record(orthonormality(*basis));
  }
  record(separability());
  record(dual_method(basis));
  record(gp_order());
  record(truncation_abort());
  return rep;
}

}  // namespace twobody
