#pragma once

// Special functions needed by the two-body eigenstates: Gamma, Hermite
// polynomials and functions, Kummer M and Tricomi U(a, 1/2, z).
//
// All functions are pure and thread-safe.

namespace twobody::specfun {

/// ln|Γ(x)| together with the sign of Γ(x).
struct SignedLog {
  double log_abs;
  int sign;
};

/// sin(πx), exact zeros at integers.
double sin_pi(double x);

/// Γ(x). Throws PoleError at non-positive integers. Overflows to +inf above
/// x ≈ 171.6.
double gamma(double x);

/// ln|Γ(x)| and sign(Γ(x)). Throws PoleError at non-positive integers.
SignedLog log_gamma(double x);

/// 1/Γ(x); zero at the poles of Γ.
double reciprocal_gamma(double x);

/// Γ(-E/2 + 3/4) / Γ(-E/2 + 1/4), evaluated in log space.
///
/// Returns exactly 0 on the denominator poles E = 2k + 1/2 and throws
/// PoleError on the numerator poles E = 2k + 3/2 (k = 0, 1, ...). Both are
/// detected to a relative tolerance of 1e-13 in E.
double gamma_ratio(double energy);

inline constexpr int kMaxHermiteOrder = 120;

/// Physicists' Hermite polynomial H_n(x), 0 <= n <= kMaxHermiteOrder.
double hermite(int n, double x);

/// Normalized Hermite function h_n(x) = H_n(x) e^{-x²/2} / sqrt(2^n n! √π),
/// through the normalized three-term recurrence (no factorials).
double hermite_function(int n, double x);

/// Fills out[0..count) with h_0(x) .. h_{count-1}(x).
void hermite_functions(int count, double x, double* out);

/// Kummer M(a, b, z) by its power series. Intended for moderate |z|.
double kummer_m(double a, double b, double z);

inline constexpr double kTricomiMinA = -60.0;
inline constexpr double kTricomiMaxA = 10.0;
inline constexpr double kTricomiMaxZ = 700.0;

/// Tricomi U(a, 1/2, z) for z >= 0 and a in [kTricomiMinA, kTricomiMaxA].
///
/// Small z with a < 1 uses the two-series decomposition
///   U = √π [ M(a,½,z)/Γ(a+½) − 2√z M(a+½,3/2,z)/Γ(a) ].
/// Otherwise it evaluates the Laplace integral for a shifted into [1, 2) and
/// recurs backwards in a, the stable direction for U.
double tricomi_u_half(double a, double z);

}  // namespace twobody::specfun
