#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

#include "twobody/error.hpp"

namespace twobody::quad {

/// Nodes and weights of a quadrature rule, ∫ f ≈ Σ w_i f(x_i).
struct Rule {
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const { return nodes.size(); }

  template <class F>
  double integrate(F&& f) const {
    double sum = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) sum += weights[i] * f(nodes[i]);
    return sum;
  }
};

/// n-point Gauss–Legendre on [-1, 1].
Rule gauss_legendre(int n);

/// n-point Gauss–Hermite, returned with *scaled* weights w_i e^{x_i²}, so
/// that ∫ f(x) dx ≈ Σ w_i f(x_i) directly for f decaying like a Gaussian.
/// Weights come from the Christoffel function of normalized Hermite
/// functions; avoids under/overflow up to several hundred nodes.
Rule gauss_hermite(int n);

/// Composite Gauss–Legendre on [a, b] with panels no wider than panel_width.
Rule composite_gauss_legendre(double a, double b, double panel_width, int order);

/// Trapezoid rule on [a, b] with step h (end weights halved).
Rule trapezoid(double a, double b, double h);

/// ∫_0^∞ f(s) ds by exp-sinh double-exponential quadrature. Tolerates
/// algebraic endpoint singularities at 0. Throws ConvergenceError if the
/// relative tolerance is not met after refinement.
double exp_sinh(const std::function<double(double)>& f, double rel_tol = 1e-14);

/// Same rule for N integrands sharing nodes. Each component must meet rel_tol.
template <std::size_t N, class F>
std::array<double, N> exp_sinh_n(F&& f, double rel_tol) {
  constexpr double kHalfPi = 0.5 * std::numbers::pi;
  constexpr double kTMax = 6.0;
  std::array<double, N> sum{};
  auto add = [&](double t) {
    const double x = std::exp(kHalfPi * std::sinh(t));
    const double w = kHalfPi * std::cosh(t) * x;
    if (x == 0.0 || !std::isfinite(w)) return;
    const std::array<double, N> v = f(x);
    for (std::size_t i = 0; i < N; ++i) {
      if (std::isfinite(v[i])) sum[i] += w * v[i];
    }
  };
  double h = 0.5;
  int steps = static_cast<int>(2.0 * kTMax / h);
  for (int k = 0; k <= steps; ++k) add(-kTMax + k * h);
  std::array<double, N> prev = sum;
  for (std::size_t i = 0; i < N; ++i) prev[i] *= h;
  for (int level = 0; level < 10; ++level) {
    h *= 0.5;
    steps *= 2;
    for (int k = 1; k < steps; k += 2) add(-kTMax + k * h);
    std::array<double, N> cur = sum;
    bool done = true;
    for (std::size_t i = 0; i < N; ++i) {
      cur[i] *= h;
      if (std::fabs(cur[i] - prev[i]) > rel_tol * std::fabs(cur[i])) done = false;
    }
    if (done && level >= 1) return cur;
    prev = cur;
  }
  throw ConvergenceError("exp_sinh: tolerance not reached");
}

}  // namespace twobody::quad
