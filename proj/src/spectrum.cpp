#include "twobody/spectrum.hpp"

#include <cmath>
#include <string>

#include "twobody/error.hpp"
#include "twobody/parallel.hpp"
#include "twobody/specfun.hpp"

namespace twobody {

double TrapModel::relative_delta_strength() const {
  return convention == CouplingConvention::kHamiltonian ? g / std::sqrt(2.0) : g;
}

double TrapModel::scattering_length() const {
  if (g == 0.0) throw DomainError("scattering length undefined at g = 0");
  return -2.0 / g;
}

namespace {

std::string interval_text(double a, double b) {
  return "[" + std::to_string(a) + ", " + std::to_string(b) + "]";
}

// Brent's method on [a, b] with f(a), f(b) of opposite sign. Stops when the
// bracket is narrower than width_tol.
double brent(const auto& f, double a, double b, double fa, double fb, double width_tol) {
  if ((fa > 0) == (fb > 0)) throw BracketError("no sign change on " + interval_text(a, b));
  double c = a, fc = fa, d = b - a, e = d;
  for (int it = 0; it < 200; ++it) {
    if ((fb > 0) == (fc > 0)) {
      c = a;
      fc = fa;
      d = e = b - a;
    }
    if (std::fabs(fc) < std::fabs(fb)) {
      a = b; b = c; c = a;
      fa = fb; fb = fc; fc = fa;
    }
    const double tol = 2.0 * 2.2e-16 * std::fabs(b) + 0.5 * width_tol;
    const double m = 0.5 * (c - b);
    if (std::fabs(m) <= tol || fb == 0.0) return b;
    if (std::fabs(e) >= tol && std::fabs(fa) > std::fabs(fb)) {
      // secant or inverse quadratic step
      double p, q, r;
      const double s = fb / fa;
      if (a == c) {
        p = 2.0 * m * s;
        q = 1.0 - s;
      } else {
        q = fa / fc;
        r = fb / fc;
        p = s * (2.0 * m * q * (q - r) - (b - a) * (r - 1.0));
        q = (q - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0) q = -q; else p = -p;
      if (2.0 * p < std::min(3.0 * m * q - std::fabs(tol * q), std::fabs(e * q))) {
        e = d;
        d = p / q;
      } else {
        d = m;
        e = m;
      }
    } else {
      d = m;
      e = m;
    }
    a = b;
    fa = fb;
    b += std::fabs(d) > tol ? d : (m > 0 ? tol : -tol);
    fb = f(b);
  }
  throw ConvergenceError("root refinement did not converge on " + interval_text(a, b));
}

}  // namespace

std::vector<double> solve_relative_energies(const TrapModel& model, int count) {
  if (count < 1) throw DomainError("solve_relative_energies: count < 1");
  if (model.noninteracting()) throw DomainError("solve_relative_energies: model is noninteracting");
  if (!std::isfinite(model.g) || std::fabs(model.g) > kMaxAbsCoupling) {
    throw DomainError("solve_relative_energies: |g| above 5");
  }
  const double target = model.root_target();
  const auto f = [target](double e) { return specfun::gamma_ratio(e) - target; };

  // A root sits between each numerator pole and the neighbouring zero of the
  // ratio: below 2k+1/2 for attraction, above it for repulsion.
  std::vector<double> out;
  out.reserve(count);
  for (int k = 0; k < count; ++k) {
    const double zero = 2.0 * k + 0.5;
    double lo, hi, flo, fhi;
    if (target > 0.0) {
      hi = zero;
      fhi = -target;
      if (k == 0) {
        lo = zero - 1.0;
        flo = f(lo);
        for (int grow = 0; flo <= 0.0; ++grow) {
          if (grow > 60) throw BracketError("no ground-state bracket below 1/2");
          lo = zero - 2.0 * (zero - lo);
          flo = f(lo);
        }
      } else {
        // step just off the pole at 2k - 1/2, where the ratio is +infinite
        const double pole = zero - 1.0;
        lo = pole + 1e-11 * std::max(1.0, pole);
        flo = f(lo);
        for (int shrink = 0; !(flo > 0.0); ++shrink) {
          if (shrink > 20) throw BracketError("pole side did not change sign on " + interval_text(pole, zero));
          lo = pole + (lo - pole) * 0.1;
          flo = f(lo);
        }
      }
    } else {
      lo = zero;
      flo = -target;
      const double pole = zero + 1.0;
      hi = pole - 1e-11 * std::max(1.0, pole);
      fhi = f(hi);
      for (int shrink = 0; !(fhi < 0.0); ++shrink) {
        if (shrink > 20) throw BracketError("pole side did not change sign on " + interval_text(zero, pole));
        hi = pole - (pole - hi) * 0.1;
        fhi = f(hi);
      }
    }
    const double e = brent(f, lo, hi, flo, fhi, 1e-13);
    if (!(std::fabs(f(e)) <= 1e-11)) {
      throw ConvergenceError("residual above 1e-11 at root in " + interval_text(lo, hi));
    }
    out.push_back(e);
  }
  return out;
}

double eval_cm_state(int n, double X) { return specfun::hermite_function(n, X); }

double rel_shape(double nu, double xi) {
  const double z = xi * xi;
  if (z > specfun::kTricomiMaxZ) return 0.0;
  return specfun::tricomi_u_half(-nu, z) * std::exp(-0.5 * z);
}

double eval_rel_state(const RelLevel& level, double xi) { return level.norm * rel_shape(level.nu, xi); }

double relative_extent(double e_max) { return std::sqrt(2.0 * std::max(e_max, 0.5)) + 7.0; }

quad::Rule relative_rule(double xi_max) { return quad::composite_gauss_legendre(0.0, xi_max, 0.125, 16); }

double compute_norm(const RelLevel& level) {
  const double xi_max = relative_extent(level.energy);
  const quad::Rule r = relative_rule(xi_max);
  const double half = r.integrate([&](double xi) {
    const double u = rel_shape(level.nu, xi);
    return u * u;
  });
  if (!(half > 0.0) || !std::isfinite(half)) {
    throw ConvergenceError("compute_norm: non-positive norm integral for m = " + std::to_string(level.m));
  }
  return 1.0 / std::sqrt(2.0 * half);
}

EigenBasis build_basis(const TrapModel& model, BasisSize size) {
  if (size.n_cm < 1 || size.m_rel < 1) throw DomainError("build_basis: empty truncation");
  if (size.n_cm > specfun::kMaxHermiteOrder + 1) throw DomainError("build_basis: n_cm above 121");
  EigenBasis b;
  b.model = model;
  for (int n = 0; n < size.n_cm; ++n) b.cm.push_back({n, n + 0.5});

  std::vector<double> energies;
  if (model.noninteracting()) {
    for (int j = 0; j < size.m_rel; ++j) energies.push_back(2.0 * j + 0.5);
  } else {
    energies = solve_relative_energies(model, size.m_rel);
  }
  if (-(2.0 * energies.back() - 1.0) / 4.0 < specfun::kTricomiMinA) {
    throw DomainError("build_basis: m_rel too large for the U evaluator");
  }

  b.xi_max = relative_extent(energies.back());
  b.half_line = relative_rule(b.xi_max);
  const std::size_t nodes = b.half_line.size();
  b.rel_table.assign(static_cast<std::size_t>(size.m_rel) * nodes, 0.0);
  std::vector<double> norms(size.m_rel, 0.0);

  parallel_for(size.m_rel, [&](int j) {
    const double nu = (2.0 * energies[j] - 1.0) / 4.0;
    double* row = b.rel_table.data() + static_cast<std::size_t>(j) * nodes;
    double half = 0.0;
    for (std::size_t i = 0; i < nodes; ++i) {
      row[i] = rel_shape(nu, b.half_line.nodes[i]);
      half += b.half_line.weights[i] * row[i] * row[i];
    }
    norms[j] = 1.0 / std::sqrt(2.0 * half);
    for (std::size_t i = 0; i < nodes; ++i) row[i] *= norms[j];
  });
  for (int j = 0; j < size.m_rel; ++j) {
    RelLevel lv;
    lv.m = 2 * j;
    lv.energy = energies[j];
    lv.nu = (2.0 * energies[j] - 1.0) / 4.0;
    lv.norm = norms[j];
    b.rel.push_back(lv);
  }
  return b;
}

}  // namespace twobody
