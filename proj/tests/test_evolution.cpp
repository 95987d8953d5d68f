#include <cmath>
#include <numbers>

#include "doctest.h"
#include "twobody/error.hpp"
#include "twobody/evolution.hpp"

using namespace twobody;

namespace {
std::shared_ptr<const EigenBasis> basis(double g, BasisSize s = {}) {
  return std::make_shared<const EigenBasis>(build_basis(TrapModel{g}, s));
}
const Grid1D kGrid = Grid1D(256, 12.8).conjugate();
}  // namespace

TEST_CASE("grid layout") {
  const Grid1D g(8, 2.0);
  CHECK(g.step() == 0.5);
  CHECK(g.at(0) == -2.0);
  CHECK(g.at(4) == 0.0);
  for (int i = 1; i < 8; ++i) CHECK(g.at(g.mirror(i)) == -g.at(i));
  CHECK(g.conjugate().x_max == doctest::Approx(std::numbers::pi / 0.5));
  CHECK_THROWS_AS(Grid1D(7, 1.0), DomainError);
  CHECK_THROWS_AS(Grid1D(8, 0.0), DomainError);
}

TEST_CASE("phase evolution") {
  const auto b = basis(-0.2);
  const TwoBodyState s0 = decompose(build_cat(3.0, CatSign::kSymmetric), b);
  const TwoBodyState same = evolve_coefficients(s0, 0.0);
  for (std::size_t i = 0; i < s0.alpha.size(); ++i) CHECK(same.alpha[i] == s0.alpha[i]);
  const TwoBodyState s1 = evolve_coefficients(s0, 7.3);
  for (std::size_t i = 0; i < s0.alpha.size(); ++i) CHECK(std::abs(std::abs(s1.alpha[i]) - std::abs(s0.alpha[i])) < 1e-15);
  // evolving from an evolved state composes
  const TwoBodyState s2 = evolve_coefficients(evolve_coefficients(s0, 3.1), 7.3);
  for (std::size_t i = 0; i < s0.alpha.size(); ++i) CHECK(std::abs(s2.alpha[i] - s1.alpha[i]) < 1e-12);
  CHECK_THROWS_AS(evolve_coefficients(s0, -1.0), DomainError);

  const auto b0 = basis(0.0);
  const TwoBodyState h0 = decompose(build_cat(2.0, CatSign::kSymmetric), b0);
  const TwoBodyState h1 = evolve_coefficients(h0, 1.0);
  for (std::size_t i = 0; i < h0.alpha.size(); ++i) CHECK(std::abs(h1.alpha[i] - h0.alpha[i]) < 1e-10);
}

TEST_CASE("gaussian ground state in momentum space") {
  const auto b = basis(0.0, {8, 8});
  const TwoBodyState s = decompose(build_cat(0.0, CatSign::kSymmetric), b);
  const MomentumWavefunction psi = assemble_momentum_wavefunction(s, kGrid);
  double worst = 0.0;
  for (int i = 0; i < kGrid.n; ++i) {
    for (int j = 0; j < kGrid.n; ++j) {
      const double k1 = kGrid.at(i), k2 = kGrid.at(j);
      worst = std::max(worst, std::fabs(std::norm(psi.at(i, j)) - std::exp(-k1 * k1 - k2 * k2) / std::numbers::pi));
    }
  }
  CHECK(worst < 1e-6);
  CHECK(std::fabs(psi.norm2() - 1.0) < 1e-10);
  const NaturalOrbitalSet no = natural_orbitals(reduce_density_matrix(psi), 2);
  CHECK(no.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(std::fabs(no.eigenvalues[1]) < 1e-10);
}

TEST_CASE("cat momentum density at t = 0") {
  const auto b = basis(-0.2);
  const CatSpec cat = build_cat(3.0, CatSign::kSymmetric);
  const TwoBodyState s = decompose(cat, b);
  const MomentumAssembler asm_(*b, kGrid);
  const MomentumWavefunction psi = asm_.assemble(s);
  // the initial product is Gaussian in k, so nothing reaches the edge
  CHECK(MomentumAssembler::edge_fraction(psi) < 1e-12);
  const MomentumWavefunction later = asm_.assemble(evolve_coefficients(s, 1.3));
  // the relative cusp leaves an algebraic κ^-2 tail at later times
  CHECK(MomentumAssembler::edge_fraction(later) < 1e-3);
  const std::vector<double> n = reduce_density_matrix(psi).diagonal();
  double worst = 0.0;
  for (int i = 0; i < kGrid.n; ++i) worst = std::max(worst, std::fabs(n[i] - std::norm(cat.momentum(kGrid.at(i)))));
  CHECK(worst < 1e-5);

  for (auto sign : {CatSign::kSymmetric, CatSign::kAntisymmetric}) {
    const CatSpec c = build_cat(2.0, sign);
    const MomentumWavefunction p = asm_.assemble(decompose(c, b));
    // the product state has a single orbital
    const NaturalOrbitalSet no = natural_orbitals(reduce_density_matrix(p), 1);
    CHECK(no.eigenvalues[0] > 1.0 - 1e-12);
    double dev = 0.0;
    const std::vector<double> od = no.orbital_density(0);
    for (int i = 0; i < kGrid.n; ++i) dev = std::max(dev, std::fabs(od[i] - std::norm(c.momentum(kGrid.at(i)))));
    CHECK(dev < 1e-5);
  }
}

TEST_CASE("evolved state invariants") {
  const auto b = basis(-0.2);
  const TwoBodyState s0 = decompose(build_cat(3.0, CatSign::kSymmetric), b);
  const MomentumAssembler assembler(*b, kGrid);
  for (double t : {2.3, 5.0}) {
    const MomentumWavefunction psi = assembler.assemble(evolve_coefficients(s0, t));
    CHECK(std::fabs(psi.norm2() - 1.0) < 1e-6);
    double asym = 0.0;
    for (int i = 1; i < kGrid.n; ++i)
      for (int j = 1; j < kGrid.n; ++j) asym = std::max(asym, std::abs(psi.at(i, j) - psi.at(j, i)));
    CHECK(asym < 1e-8);

    const DensityMatrix rho = reduce_density_matrix(psi);
    CHECK(std::fabs(rho.trace() - 1.0) < 1e-6);
    double herm = 0.0;
    for (int i = 0; i < kGrid.n; ++i)
      for (int j = 0; j < kGrid.n; ++j) herm = std::max(herm, std::abs(rho.at(i, j) - std::conj(rho.at(j, i))));
    CHECK(herm < 1e-12);
    const std::vector<double> n = rho.diagonal();
    double par = 0.0;
    for (int i = 1; i < kGrid.n; ++i) par = std::max(par, std::fabs(n[i] - n[kGrid.mirror(i)]));
    CHECK(par < 1e-8);

    const NaturalOrbitalSet no = natural_orbitals(rho, 4);
    double sum = 0.0;
    for (double l : no.eigenvalues) {
      CHECK(l > -1e-10);
      CHECK(l < 1.0 + 1e-10);
      sum += l;
    }
    CHECK(std::fabs(sum - 1.0) < 1e-6);
    for (std::size_t c = 1; c < no.eigenvalues.size(); ++c) CHECK(no.eigenvalues[c] <= no.eigenvalues[c - 1]);
    const double dk = kGrid.step();
    for (int a = 0; a < 4; ++a) {
      for (int c = 0; c < 4; ++c) {
        cplx ip = 0.0;
        for (int i = 0; i < kGrid.n; ++i) ip += std::conj(no.orbitals[a][i]) * no.orbitals[c][i];
        CHECK(std::abs(ip * dk - (a == c ? 1.0 : 0.0)) < 1e-8);
      }
      // eigen-residual of the weighted matrix, function normalization
      double res = 0.0;
      for (int i = 0; i < kGrid.n; ++i) {
        cplx acc = 0.0;
        for (int j = 0; j < kGrid.n; ++j) acc += dk * rho.at(i, j) * no.orbitals[a][j];
        res = std::max(res, std::abs(acc - no.eigenvalues[a] * no.orbitals[a][i]) * std::sqrt(dk));
      }
      CHECK(res < 1e-9);
      // phase convention
      double peak = 0.0;
      for (const cplx& x : no.orbitals[a]) peak = std::max(peak, std::abs(x));
      std::size_t big = 0;
      while (std::abs(no.orbitals[a][big]) < peak * (1.0 - 1e-9)) ++big;
      CHECK(std::fabs(no.orbitals[a][big].imag()) < 1e-12);
      CHECK(no.orbitals[a][big].real() > 0.0);
    }
  }
}

TEST_CASE("noninteracting evolution stays separable") {
  const auto b = basis(0.0);
  const TwoBodyState s0 = decompose(build_cat(3.0, CatSign::kSymmetric), b);
  const MomentumAssembler assembler(*b, kGrid);
  for (double t : {0.0, 0.3, 1.7, 4.25}) {
    const NaturalOrbitalSet no = natural_orbitals(reduce_density_matrix(assembler.assemble(evolve_coefficients(s0, t))), 1);
    CHECK(std::fabs(no.eigenvalues[0] - 1.0) < 1e-6);
  }
}

TEST_CASE("serial and parallel assembly agree") {
  const auto b = basis(-0.2, {20, 20});
  const TwoBodyState s = evolve_coefficients(decompose(build_cat(1.0, CatSign::kSymmetric), b), 0.77);
  const MomentumAssembler assembler(*b, kGrid);
  const MomentumWavefunction a = assembler.assemble(s, Exec::kSerial);
  const MomentumWavefunction c = assembler.assemble(s, Exec::kParallel);
  CHECK(a.values == c.values);
  const DensityMatrix ra = reduce_density_matrix(a, Exec::kSerial);
  const DensityMatrix rc = reduce_density_matrix(a, Exec::kParallel);
  CHECK(ra.entries == rc.entries);
}

TEST_CASE("position grid plus DFT reproduces the direct momentum route") {
  const Grid1D xg(256, 12.8);
  SUBCASE("smooth noninteracting state") {
    const auto b = basis(0.0, {30, 30});
    const TwoBodyState s = evolve_coefficients(decompose(build_cat(2.0, CatSign::kAntisymmetric), b), 0.4);
    const MomentumWavefunction direct = assemble_momentum_wavefunction(s, xg.conjugate());
    const MomentumWavefunction dft = dft_momentum_wavefunction(assemble_position_wavefunction(s, xg), xg);
    CHECK(dft.grid == direct.grid);
    double worst = 0.0;
    for (std::size_t i = 0; i < dft.values.size(); ++i) worst = std::max(worst, std::abs(dft.values[i] - direct.values[i]));
    CHECK(worst < 1e-10);
  }
  SUBCASE("interacting state, cusp limits the DFT to second order") {
    const auto b = basis(-0.2, {30, 30});
    const TwoBodyState s = evolve_coefficients(decompose(build_cat(1.0, CatSign::kSymmetric), b), 0.4);
    const MomentumWavefunction direct = assemble_momentum_wavefunction(s, xg.conjugate());
    const MomentumWavefunction dft = dft_momentum_wavefunction(assemble_position_wavefunction(s, xg), xg);
    double worst = 0.0;
    for (std::size_t i = 0; i < dft.values.size(); ++i) worst = std::max(worst, std::abs(dft.values[i] - direct.values[i]));
    CHECK(worst < 1e-3);
    CHECK(worst > 1e-8);
  }
  CHECK_THROWS_AS(dft_momentum_wavefunction(std::vector<cplx>(10), xg), GridError);
}
