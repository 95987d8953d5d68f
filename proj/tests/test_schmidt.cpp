#include <cmath>
#include <random>

#include "doctest.h"
#include "twobody/error.hpp"
#include "twobody/evolution.hpp"
#include "twobody/schmidt.hpp"

using namespace twobody;

namespace {
std::shared_ptr<const EigenBasis> basis(double g, BasisSize s = {}) {
  return std::make_shared<const EigenBasis>(build_basis(TrapModel{g}, s));
}
}  // namespace

TEST_CASE("product state has a single Schmidt weight") {
  const auto b = basis(-0.2);
  const SchmidtWeights w = schmidt_via_basis(decompose(build_cat(2.0, CatSign::kAntisymmetric), b));
  CHECK(w.weights[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(w.weights[1] < 1e-12);
}

TEST_CASE("free evolution stays separable in the product basis") {
  const auto b = basis(0.0);
  const SchmidtOracle o(*b);
  const TwoBodyState s0 = decompose(build_cat(3.0, CatSign::kSymmetric), b);
  for (double t : {0.21, 2.6}) {
    const SchmidtWeights w = o.weights(evolve_coefficients(s0, t));
    CHECK(w.weights[0] == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("coefficient matrix is exchange symmetric") {
  const auto b = basis(-0.2, {30, 30});
  const SchmidtOracle o(*b, 40);
  const std::vector<cplx> C = o.coefficients(evolve_coefficients(decompose(build_cat(1.0, CatSign::kSymmetric), b), 3.3));
  double worst = 0.0;
  for (int a = 0; a < 40; ++a)
    for (int c = 0; c < 40; ++c) worst = std::max(worst, std::abs(C[a * 40 + c] - C[c * 40 + a]));
  CHECK(worst < 1e-13);
}

TEST_CASE("Schmidt weights match the momentum-grid natural orbitals") {
  const auto b = basis(-0.2);
  const SchmidtOracle o(*b);
  const MomentumAssembler assembler(*b, Grid1D(256, 12.8).conjugate());
  std::mt19937_64 rng(20260);
  std::uniform_real_distribution<double> when(0.0, 12.0);
  for (double L : {1.0, 3.0}) {
    const TwoBodyState s0 = decompose(build_cat(L, CatSign::kSymmetric), b);
    for (int k = 0; k < 3; ++k) {
      const TwoBodyState s = evolve_coefficients(s0, when(rng));
      const SchmidtWeights w = o.weights(s);
      const NaturalOrbitalSet no = natural_orbitals(reduce_density_matrix(assembler.assemble(s)), 0);
      for (int i = 0; i < 10; ++i) CHECK(std::fabs(w.weights[i] - no.eigenvalues[i]) < 1e-6);
    }
  }
}

TEST_CASE("small product basis is reported as truncated") {
  const auto b = basis(-0.2, {40, 20});
  CHECK_THROWS_AS(schmidt_via_basis(decompose(build_cat(3.0, CatSign::kSymmetric), b), 6), TruncationError);
  CHECK_THROWS_AS(SchmidtOracle(*b, 1), DomainError);
}
