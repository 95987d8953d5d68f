#include "twobody/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "twobody/error.hpp"
#include "twobody/specfun.hpp"

namespace twobody::quad {

Rule gauss_legendre(int n) {
  if (n < 1) throw DomainError("gauss_legendre: n < 1");
  Rule r;
  r.nodes.assign(n, 0.0);
  r.weights.assign(n, 0.0);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 1.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) {
        p1 = x;
        p0 = 1.0;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-16) break;
    }
    r.nodes[i] = -x;
    r.nodes[n - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    r.weights[i] = w;
    r.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) r.nodes[n / 2] = 0.0;
  return r;
}

Rule gauss_hermite(int n) {
  if (n < 1 || n > 500) throw DomainError("gauss_hermite: n outside [1, 500]");
  Rule r;
  r.nodes.assign(n, 0.0);
  r.weights.assign(n, 0.0);
  std::vector<double> h(n + 1);
  // largest roots first, classic starting guesses
  std::vector<double> roots;
  const int half = (n + 1) / 2;
  double z = 0.0;
  for (int i = 0; i < half; ++i) {
    if (i == 0) {
      z = std::sqrt(2.0 * n + 1.0) - 1.85575 * std::pow(2.0 * n + 1.0, -1.0 / 6.0);
    } else if (i == 1) {
      z -= 1.14 * std::pow(static_cast<double>(n), 0.426) / z;
    } else if (i == 2) {
      z = 1.86 * z - 0.86 * roots[0];
    } else if (i == 3) {
      z = 1.91 * z - 0.91 * roots[1];
    } else {
      z = 2.0 * z - roots[i - 2];
    }
    for (int it = 0; it < 200; ++it) {
      specfun::hermite_functions(n + 1, z, h.data());
      // h_n' = sqrt(2n) h_{n-1} - x h_n
      const double d = std::sqrt(2.0 * n) * h[n - 1] - z * h[n];
      const double dz = h[n] / d;
      z -= dz;
      if (std::fabs(dz) < 1e-15 * std::max(1.0, std::fabs(z))) break;
    }
    roots.push_back(z);
  }
  for (int i = 0; i < half; ++i) {
    const double x = roots[i];
    specfun::hermite_functions(n, x, h.data());
    double s = 0.0;
    for (int k = 0; k < n; ++k) s += h[k] * h[k];
    r.nodes[n - 1 - i] = x;
    r.nodes[i] = -x;
    r.weights[n - 1 - i] = 1.0 / s;
    r.weights[i] = 1.0 / s;
  }
  if (n % 2 == 1) r.nodes[n / 2] = 0.0;
  return r;
}

Rule composite_gauss_legendre(double a, double b, double panel_width, int order) {
  if (!(b > a) || !(panel_width > 0.0)) throw DomainError("composite_gauss_legendre: bad interval");
  const Rule base = gauss_legendre(order);
  const int panels = std::max(1, static_cast<int>(std::ceil((b - a) / panel_width - 1e-12)));
  const double w = (b - a) / panels;
  Rule r;
  r.nodes.reserve(static_cast<std::size_t>(panels) * order);
  r.weights.reserve(static_cast<std::size_t>(panels) * order);
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * w;
    for (int i = 0; i < order; ++i) {
      r.nodes.push_back(mid + 0.5 * w * base.nodes[i]);
      r.weights.push_back(0.5 * w * base.weights[i]);
    }
  }
  return r;
}

Rule trapezoid(double a, double b, double h) {
  if (!(b > a) || !(h > 0.0)) throw DomainError("trapezoid: bad interval");
  const int n = static_cast<int>(std::lround((b - a) / h));
  Rule r;
  for (int i = 0; i <= n; ++i) {
    r.nodes.push_back(a + i * h);
    r.weights.push_back((i == 0 || i == n) ? 0.5 * h : h);
  }
  return r;
}

double exp_sinh(const std::function<double(double)>& f, double rel_tol) {
  return exp_sinh_n<1>([&f](double x) { return std::array<double, 1>{f(x)}; }, rel_tol)[0];
}

}  // namespace twobody::quad
