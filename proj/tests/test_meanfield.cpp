#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "twobody/error.hpp"
#include "twobody/meanfield.hpp"

using namespace twobody;

namespace {
double max_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}
}  // namespace

TEST_CASE("grid and initial field") {
  const GPSolver solver(-0.2);
  CHECK(solver.grid().n == 1024);
  CHECK(solver.grid().x_max == doctest::Approx(25.6));
  CHECK(solver.grid().step() == doctest::Approx(0.05));
  const GPField f = solver.initial(build_cat(3.0, CatSign::kSymmetric));
  CHECK(f.norm2() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(GPSolver(0.1, GPParams{1024, 0.05, 0.0}), DomainError);
}

TEST_CASE("ground Gaussian is stationary without interaction") {
  const GPSolver solver(0.0);
  GPField f = solver.initial(build_cat(0.0, CatSign::kSymmetric));
  const GPField f0 = f;
  CHECK(solver.energy(f) == doctest::Approx(0.5).epsilon(1e-12));
  double worst = 0.0;
  for (int period = 1; period <= 10; ++period) {
    solver.advance_to(f, period);
    for (std::size_t j = 0; j < f.values.size(); ++j)
      worst = std::max(worst, std::fabs(std::norm(f.values[j]) - std::norm(f0.values[j])));
  }
  CHECK(worst < 1e-8);
  CHECK(f.time == 10.0);
}

TEST_CASE("free cat follows the coherent-state solution") {
  const GPSolver solver(0.0);
  for (auto sign : {CatSign::kSymmetric, CatSign::kAntisymmetric}) {
    const CatSpec cat = build_cat(3.0, sign);
    GPField f = solver.initial(cat);
    double worst = 0.0;
    for (double t : {0.37, 1.5, 2.71, 4.0, 5.0}) {
      solver.advance_to(f, t);
      for (int j = 0; j < solver.grid().n; ++j)
        worst = std::max(worst, std::abs(f.values[j] - oracle::free_cat(3.0, cat.sigma(), t, solver.grid().at(j))));
    }
    CHECK(worst < 1e-5);
  }
}

TEST_CASE("norm and energy conservation with attraction") {
  const GPSolver solver(-0.2);
  GPField f = solver.initial(build_cat(1.0, CatSign::kSymmetric));
  const double e0 = solver.energy(f);
  solver.advance(f, 10000, solver.params().dt);
  CHECK(std::fabs(f.norm2() - 1.0) < 1e-8);
  CHECK(std::fabs(solver.energy(f) - e0) / std::fabs(e0) < 1e-5);
}

TEST_CASE("momentum density conventions") {
  const GPSolver solver(-0.2);
  const CatSpec cat = build_cat(3.0, CatSign::kSymmetric);
  const MomentumDensity n = solver.momentum_density(solver.initial(cat));
  CHECK(n.grid == solver.grid().conjugate());
  CHECK(n.integral() == doctest::Approx(1.0).epsilon(1e-8));
  double worst = 0.0;
  for (int p = 0; p < n.grid.n; ++p) worst = std::max(worst, std::fabs(n.values[p] - std::norm(cat.momentum(n.grid.at(p)))));
  CHECK(worst < 1e-12);
}

TEST_CASE("antisymmetric cat keeps its parity") {
  const GPSolver solver(-0.2);
  GPField f = solver.initial(build_cat(2.0, CatSign::kAntisymmetric));
  const Grid1D& x = solver.grid();
  double odd = 0.0, dens = 0.0;
  for (int s = 1; s <= 8; ++s) {
    solver.advance_to(f, 0.125 * s);
    for (int j = 1; j < x.n; ++j) odd = std::max(odd, std::abs(f.values[j] + f.values[x.mirror(j)]));
    const MomentumDensity n = solver.momentum_density(f);
    for (int p = 1; p < n.grid.n; ++p) dens = std::max(dens, std::fabs(n.values[p] - n.values[n.grid.mirror(p)]));
  }
  CHECK(odd < 1e-7);
  CHECK(dens < 1e-7);
}

TEST_CASE("Strang splitting is second order") {
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
  const double order = std::log2(max_diff(runs[0], runs[1]) / max_diff(runs[1], runs[2]));
  CHECK(order == doctest::Approx(2.0).epsilon(0.1));
}

TEST_CASE("serial and parallel propagation agree") {
  const CatSpec cat = build_cat(1.0, CatSign::kSymmetric);
  const GPSolver a(-0.4, {}, Exec::kSerial), b(-0.4, {}, Exec::kParallel);
  GPField fa = a.initial(cat), fb = b.initial(cat);
  a.advance(fa, 500, a.params().dt);
  b.advance(fb, 500, b.params().dt);
  CHECK(fa.values == fb.values);
  CHECK_THROWS_AS(a.advance_to(fa, 0.0), DomainError);
}
