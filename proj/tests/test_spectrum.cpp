#include <cmath>
#include <numbers>

#include "doctest.h"
#include "oracles.hpp"
#include "twobody/error.hpp"
#include "twobody/quadrature.hpp"
#include "twobody/specfun.hpp"
#include "twobody/spectrum.hpp"

using namespace twobody;

TEST_CASE("model bookkeeping") {
  TrapModel m{-0.2};
  CHECK(m.scattering_length() == doctest::Approx(10.0));
  CHECK(m.root_target() == doctest::Approx(0.1));
  TrapModel h{-0.2, CouplingConvention::kHamiltonian};
  CHECK(h.relative_delta_strength() == doctest::Approx(-0.2 / std::sqrt(2.0)));
  CHECK(TrapModel{0.0}.noninteracting());
  CHECK_THROWS_AS(TrapModel{0.0}.scattering_length(), DomainError);
}

TEST_CASE("weak coupling approaches the even harmonic ladder") {
  const auto e = solve_relative_energies(TrapModel{-1e-6}, 8);
  for (int k = 0; k < 8; ++k) CHECK(std::fabs(e[k] - (2 * k + 0.5)) < 1e-5);
  const auto r = solve_relative_energies(TrapModel{1e-6}, 4);
  for (int k = 0; k < 4; ++k) CHECK(std::fabs(r[k] - (2 * k + 0.5)) < 1e-5);
}

TEST_CASE("roots satisfy the energy condition and interlace") {
  for (double g : {-0.04, -0.2, -0.4, -2.0, -5.0, 0.3, 2.5}) {
    TrapModel m{g};
    const auto e = solve_relative_energies(m, 40);
    REQUIRE(e.size() == 40);
    for (int k = 0; k < 40; ++k) {
      CHECK(std::fabs(specfun::gamma_ratio(e[k]) - m.root_target()) <= 1e-11);
      if (g < 0) {
        CHECK(e[k] < 2 * k + 0.5);
        if (k > 0) CHECK(e[k] > 2 * k - 1.5);
      } else {
        CHECK(e[k] > 2 * k + 0.5);
        CHECK(e[k] < 2 * k + 2.5);
      }
      if (k > 0) CHECK(e[k] - e[k - 1] > 1e-6);
    }
  }
}

TEST_CASE("shift below the free level shrinks with m at fixed attraction") {
  const auto e = solve_relative_energies(TrapModel{-0.2}, 20);
  for (int k = 1; k < 20; ++k) {
    const double dk = (2 * k + 0.5) - e[k];
    const double dk1 = (2 * k - 1.5) - e[k - 1];
    CHECK(dk > 0.0);
    CHECK(dk < dk1);
  }
}

TEST_CASE("stronger attraction lowers the ground level") {
  const double e02 = solve_relative_energies(TrapModel{-0.2}, 1)[0];
  const double e04 = solve_relative_energies(TrapModel{-0.4}, 1)[0];
  CHECK(e04 < e02);
  CHECK(e02 < 0.5);
}

TEST_CASE("energies agree with the finite-difference oracle") {
  for (auto conv : {CouplingConvention::kEnergyCondition, CouplingConvention::kHamiltonian}) {
    for (double g : {-0.2, -0.4}) {
      TrapModel m{g, conv};
      const auto e = solve_relative_energies(m, 6);
      const auto o = oracle::grid_even_levels_extrapolated(m.relative_delta_strength(), 6);
      for (int k = 0; k < 6; ++k) CHECK(std::fabs(e[k] - o[k]) < 1e-6);
    }
  }
}

TEST_CASE("centre-of-mass states") {
  CHECK(eval_cm_state(0, 0.0) == doctest::Approx(0.7511255444649425).epsilon(1e-15));
  CHECK(eval_cm_state(1, 0.0) == 0.0);
  const quad::Rule r = quad::gauss_hermite(60);
  CHECK(std::fabs(r.integrate([](double x) { return std::pow(eval_cm_state(3, x), 2); }) - 1.0) < 1e-10);
}

TEST_CASE("relative states: parity, weak-coupling limit, normalization") {
  const EigenBasis b = build_basis(TrapModel{-1e-6}, {4, 6});
  double worst = 0.0;
  for (double xi = -6.0; xi <= 6.0; xi += 0.01) {
    worst = std::max(worst, std::fabs(eval_rel_state(b.rel[0], xi) - eval_cm_state(0, xi)));
    CHECK(eval_rel_state(b.rel[2], -xi) == eval_rel_state(b.rel[2], xi));
  }
  CHECK(worst <= 1e-4);
  CHECK(b.rel[0].norm == doctest::Approx(std::pow(std::numbers::pi, -0.25)).epsilon(1e-5));

  // noninteracting level m is exactly the Hermite function up to sign
  const EigenBasis f = build_basis(TrapModel{0.0}, {4, 6});
  for (int j = 0; j < 6; ++j) {
    const double s = (eval_rel_state(f.rel[j], 0.3) * eval_cm_state(2 * j, 0.3) > 0) ? 1.0 : -1.0;
    for (double xi : {0.0, 0.7, 1.9, 3.3, 5.0}) {
      CHECK(std::fabs(eval_rel_state(f.rel[j], xi) - s * eval_cm_state(2 * j, xi)) < 1e-10);
    }
  }
}

TEST_CASE("normalization: two quadrature schemes agree") {
  const EigenBasis b = build_basis(TrapModel{-0.2}, {4, 8});
  for (int j = 0; j < 8; ++j) {
    const RelLevel& lv = b.rel[j];
    CHECK(std::fabs(compute_norm(lv) - lv.norm) <= 1e-10 * lv.norm);
    const double es = 2.0 * quad::exp_sinh([&](double xi) {
      return xi * xi > specfun::kTricomiMaxZ ? 0.0 : std::pow(rel_shape(lv.nu, xi), 2);
    }, 1e-12);
    CHECK(std::fabs(1.0 / std::sqrt(es) - lv.norm) <= 1e-9 * lv.norm);
    CHECK(std::fabs(2.0 * relative_rule(relative_extent(lv.energy)).integrate([&](double xi) {
      return std::pow(eval_rel_state(lv, xi), 2);
    }) - 1.0) < 1e-9);
  }
}

TEST_CASE("orthonormality of the tabulated relative states") {
  for (double g : {-0.2, -0.4, 1.0}) {
    const EigenBasis b = build_basis(TrapModel{g});
    double worst = 0.0;
    for (int a = 0; a < b.m_rel(); ++a) {
      for (int c = 0; c <= a; ++c) {
        double s = 0.0;
        for (std::size_t i = 0; i < b.nodes(); ++i) s += b.half_line.weights[i] * b.rel_row(a)[i] * b.rel_row(c)[i];
        worst = std::max(worst, std::fabs(2.0 * s - (a == c ? 1.0 : 0.0)));
      }
    }
    CHECK(worst <= 1e-7);
  }
}

TEST_CASE("energy expectation of the ground relative state") {
  for (auto conv : {CouplingConvention::kEnergyCondition, CouplingConvention::kHamiltonian}) {
    TrapModel m{-0.2, conv};
    const EigenBasis b = build_basis(m, {2, 2});
    const RelLevel& lv = b.rel[0];
    const auto phi = [&](double x) { return eval_rel_state(lv, x); };
    // derivative by a five-point stencil, away from the cusp at 0
    const auto dphi = [&](double x) {
      const double h = std::min(1e-3, 0.25 * x);
      return (-phi(x + 2 * h) + 8 * phi(x + h) - 8 * phi(x - h) + phi(x - 2 * h)) / (12 * h);
    };
    const quad::Rule r = relative_rule(12.0);
    const double half = r.integrate([&](double x) {
      const double p = phi(x), d = dphi(x);
      return 0.5 * d * d + 0.5 * x * x * p * p;
    });
    const double energy = 2.0 * half + m.relative_delta_strength() * phi(0.0) * phi(0.0);
    CHECK(std::fabs(energy - lv.energy) < 1e-6);
  }
}

TEST_CASE("argument checks") {
  CHECK_THROWS_AS(solve_relative_energies(TrapModel{0.0}, 3), DomainError);
  CHECK_THROWS_AS(solve_relative_energies(TrapModel{-6.0}, 3), DomainError);
  CHECK_THROWS_AS(solve_relative_energies(TrapModel{-0.2}, 0), DomainError);
}
