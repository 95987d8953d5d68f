#include "twobody/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "twobody/error.hpp"
#include "twobody/quadrature.hpp"

namespace twobody::specfun {

namespace {

constexpr double kPi = std::numbers::pi;

// Lanczos-type fit with 14 terms (g = 671/128); about 1e-15 relative in ln Γ.
constexpr std::array<double, 14> kLanczos = {
    57.1562356658629235,     -59.5979603554754912,    14.1360979747417471,
    -0.491913816097620199,   .339946499848118887e-4,  .465236289270485756e-4,
    -.983744753048795646e-4, .158088703224912494e-3,  -.210264441724104883e-3,
    .217439618115212643e-3,  -.164318106536763890e-3, .844182239838527433e-4,
    -.261908384015814087e-4, .368991826595316234e-5};

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::nearbyint(x); }

// ln Γ(x) for x >= 1/2
double lanczos_log_gamma(double x) {
  double y = x;
  double tmp = x + 5.24218750000000000;
  tmp = (x + 0.5) * std::log(tmp) - tmp;
  double ser = 0.999999999999997092;
  for (double c : kLanczos) ser += c / ++y;
  return tmp + std::log(2.5066282746310005 * ser / x);
}

}  // namespace

double sin_pi(double x) {
  const double n = std::nearbyint(x);
  const double f = x - n;
  if (f == 0.0) return 0.0;
  const double s = std::sin(kPi * f);
  return std::fmod(std::fabs(n), 2.0) == 1.0 ? -s : s;
}

SignedLog log_gamma(double x) {
  if (!std::isfinite(x)) throw DomainError("log_gamma: non-finite argument");
  if (is_nonpositive_integer(x)) throw PoleError("log_gamma: pole at " + std::to_string(x));
  if (x < 0.5) {
    // Γ(x) Γ(1-x) = π / sin(πx), and 1-x > 1/2 so Γ(1-x) > 0.
    const double s = sin_pi(x);
    const SignedLog r = log_gamma(1.0 - x);
    return {std::log(kPi) - std::log(std::fabs(s)) - r.log_abs, s > 0 ? 1 : -1};
  }
  return {lanczos_log_gamma(x), 1};
}

double gamma(double x) {
  if (!std::isfinite(x)) throw DomainError("gamma: non-finite argument");
  if (is_nonpositive_integer(x)) throw PoleError("gamma: pole at " + std::to_string(x));
  if (x < 0.5) return kPi / (sin_pi(x) * gamma(1.0 - x));
  if (x > 171.7) return std::numeric_limits<double>::infinity();
  // small integers are common (factorials); keep them exact
  if (x == std::nearbyint(x) && x <= 23.0) {
    double f = 1.0;
    for (int k = 2; k < static_cast<int>(x); ++k) f *= k;
    return f;
  }
  return std::exp(lanczos_log_gamma(x));
}

double reciprocal_gamma(double x) {
  if (is_nonpositive_integer(x)) return 0.0;
  if (x > 171.0) {
    const SignedLog l = log_gamma(x);
    return std::exp(-l.log_abs);
  }
  return 1.0 / gamma(x);
}

double gamma_ratio(double energy) {
  if (!std::isfinite(energy)) throw DomainError("gamma_ratio: non-finite energy");
  const double num = -0.5 * energy + 0.75;
  const double den = -0.5 * energy + 0.25;
  const double tol = 1e-13 * std::max(1.0, std::fabs(energy));
  const double num_n = std::nearbyint(num);
  if (num_n <= 0.0 && std::fabs(num - num_n) <= tol) {
    throw PoleError("gamma_ratio: numerator pole at E = " + std::to_string(energy));
  }
  const double den_n = std::nearbyint(den);
  if (den_n <= 0.0 && std::fabs(den - den_n) <= tol) return 0.0;
  const SignedLog a = log_gamma(num);
  const SignedLog b = log_gamma(den);
  return a.sign * b.sign * std::exp(a.log_abs - b.log_abs);
}

double hermite(int n, double x) {
  if (n < 0 || n > kMaxHermiteOrder) {
    throw DomainError("hermite: order " + std::to_string(n) + " outside [0, 120]");
  }
  if (n == 0) return 1.0;
  double hm1 = 1.0;
  double h = 2.0 * x;
  for (int k = 1; k < n; ++k) {
    const double hp1 = 2.0 * x * h - 2.0 * k * hm1;
    hm1 = h;
    h = hp1;
  }
  return h;
}

void hermite_functions(int count, double x, double* out) {
  if (count <= 0) return;
  const double h0 = std::pow(kPi, -0.25) * std::exp(-0.5 * x * x);
  out[0] = h0;
  if (count == 1) return;
  out[1] = std::sqrt(2.0) * x * h0;
  for (int k = 1; k + 1 < count; ++k) {
    out[k + 1] = std::sqrt(2.0 / (k + 1)) * x * out[k] - std::sqrt(static_cast<double>(k) / (k + 1)) * out[k - 1];
  }
}

double hermite_function(int n, double x) {
  if (n < 0) throw DomainError("hermite_function: negative order");
  double hm1 = 0.0;
  double h = std::pow(kPi, -0.25) * std::exp(-0.5 * x * x);
  for (int k = 0; k < n; ++k) {
    const double hp1 = std::sqrt(2.0 / (k + 1)) * x * h - std::sqrt(static_cast<double>(k) / (k + 1)) * hm1;
    hm1 = h;
    h = hp1;
  }
  return h;
}

double kummer_m(double a, double b, double z) {
  if (is_nonpositive_integer(b)) throw PoleError("kummer_m: b is a non-positive integer");
  double term = 1.0;
  double sum = 1.0;
  double peak = 1.0;
  for (int k = 0; k < 5000; ++k) {
    term *= (a + k) * z / ((b + k) * (k + 1));
    sum += term;
    peak = std::max(peak, std::fabs(term));
    if (term == 0.0) return sum;
    if (std::fabs(term) <= 1e-17 * std::fabs(sum) && k > std::fabs(a)) return sum;
    // a terminating series ends exactly, everything else gets one more look
    if (std::fabs(term) <= 1e-17 * peak && k > std::fabs(a) + std::fabs(z)) return sum;
  }
  throw ConvergenceError("kummer_m: series did not converge");
}

namespace {

// U(a, 1/2, z) and U(a+1, 1/2, z) for a >= 1 from
//   U(a, b, z) = z^-a / Γ(a) ∫_0^∞ e^-s s^(a-1) (1 + s/z)^(b-a-1) ds
std::array<double, 2> tricomi_integral_pair(double a, double z) {
  const auto integrand = [a, z](double s) -> std::array<double, 2> {
    const double base = std::exp(-s) * std::pow(s, a - 1.0) * std::pow(1.0 + s / z, -a - 0.5);
    return {base, base * s / (1.0 + s / z)};
  };
  const std::array<double, 2> I = quad::exp_sinh_n<2>(integrand, 1e-14);
  const SignedLog lg = log_gamma(a);
  const double u0 = std::exp(-a * std::log(z) - lg.log_abs) * I[0];
  const double u1 = std::exp(-(a + 1.0) * std::log(z) - lg.log_abs - std::log(a)) * I[1];
  return {u0, u1};
}

// Fixed exp-sinh rule, h = 1/16 on t in [-4.5, 3]. For a in [1, 2) and z > 2
// the integrand is smooth and bounded and this reaches ~1e-15.
struct FixedRule {
  std::array<double, 121> log_x{};
  std::array<double, 121> x{};
  std::array<double, 121> w{};
  FixedRule() {
    const double half_pi = 0.5 * kPi;
    for (int k = 0; k < 121; ++k) {
      const double t = -4.5 + k / 16.0;
      log_x[k] = half_pi * std::sinh(t);
      x[k] = std::exp(log_x[k]);
      w[k] = half_pi * std::cosh(t) * x[k] / 16.0;
    }
  }
};

std::array<double, 2> tricomi_pair_fixed(double a, double z) {
  static const FixedRule rule;
  double i0 = 0.0, i1 = 0.0;
  for (int k = 0; k < 121; ++k) {
    const double x = rule.x[k];
    const double l1p = std::log1p(x / z);
    const double base = std::exp(-x + (a - 1.0) * rule.log_x[k] - (a + 0.5) * l1p);
    i0 += rule.w[k] * base;
    i1 += rule.w[k] * base * x / (1.0 + x / z);
  }
  const double lg = log_gamma(a).log_abs;
  const double lz = std::log(z);
  return {std::exp(-a * lz - lg) * i0, std::exp(-(a + 1.0) * lz - lg - std::log(a)) * i1};
}

}  // namespace

double tricomi_u_half(double a, double z) {
  if (!(z >= 0.0) || z > kTricomiMaxZ) throw DomainError("tricomi_u_half: z outside [0, 700]");
  if (a < kTricomiMinA || a > kTricomiMaxA) {
    throw DomainError("tricomi_u_half: a = " + std::to_string(a) + " outside [-60, 10]");
  }
  const double sqrt_pi = std::sqrt(kPi);
  if (z == 0.0) return sqrt_pi * reciprocal_gamma(a + 0.5);
  if (z <= 2.0 && a < 1.0) {
    const double m1 = kummer_m(a, 0.5, z);
    const double m2 = kummer_m(a + 0.5, 1.5, z);
    return sqrt_pi * (m1 * reciprocal_gamma(a + 0.5) - 2.0 * std::sqrt(z) * m2 * reciprocal_gamma(a));
  }
  if (a >= 1.0) return tricomi_integral_pair(a, z)[0];

  // Shift into [1, 2) and walk down; U is the minimal solution as a grows,
  // so decreasing a is the stable direction.
  const int n = static_cast<int>(std::ceil(1.0 - a));
  const double top = a + n;
  const std::array<double, 2> pair = tricomi_pair_fixed(top, z);
  double u = pair[0];      // U(top)
  double up = pair[1];     // U(top + 1)
  double ak = top;
  for (int k = 0; k < n; ++k) {
    const double um = (2.0 * ak + z - 0.5) * u - ak * (ak + 0.5) * up;
    up = u;
    u = um;
    ak -= 1.0;
  }
  return u;
}

}  // namespace twobody::specfun
