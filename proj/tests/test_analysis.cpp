#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "twobody/analysis.hpp"
#include "twobody/error.hpp"
#include "twobody/quadrature.hpp"

using namespace twobody;

namespace {
std::shared_ptr<const EigenBasis> basis(double g, BasisSize s = {}) {
  return std::make_shared<const EigenBasis>(build_basis(TrapModel{g}, s));
}
}  // namespace

TEST_CASE("measures of uniform spectra") {
  for (int n : {1, 2, 4, 8}) {
    const Measures m = measures(std::vector<double>(n, 1.0 / n));
    CHECK(std::fabs(m.K - n) < 1e-12);
    CHECK(std::fabs(m.S - std::log(n)) < 1e-12);
  }
  const Measures pure = measures({1.0, 0.0, 0.0});
  CHECK(pure.K == 1.0);
  CHECK(pure.S == 0.0);
  // clipping and renormalization
  const Measures c = measures({0.5 + 1e-9, 0.5, -1e-11});
  CHECK(c.K == doctest::Approx(2.0).epsilon(1e-8));
}

TEST_CASE("measures are permutation invariant and maximal at uniform") {
  std::mt19937_64 rng(5);
  std::exponential_distribution<double> ex;
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + trial % 7;
    std::vector<double> l(n);
    double sum = 0.0;
    for (double& x : l) sum += (x = ex(rng));
    for (double& x : l) x /= sum;
    const Measures a = measures(l);
    std::vector<double> p = l;
    std::shuffle(p.begin(), p.end(), rng);
    p.push_back(0.0);
    p.push_back(0.0);
    const Measures b = measures(p);
    CHECK(std::fabs(a.K - b.K) < 1e-12);
    CHECK(std::fabs(a.S - b.S) < 1e-12);
    CHECK(a.K <= n + 1e-12);
    CHECK(a.S <= std::log(n) + 1e-12);
    CHECK(a.K >= 1.0 - 1e-12);
    CHECK(a.S >= -1e-12);
  }
}

TEST_CASE("spectral histogram") {
  const auto b = basis(-0.2);
  const TwoBodyState s = decompose(build_cat(3.0, CatSign::kSymmetric), b);
  const std::vector<SpectralLine> h = spectral_histogram(s);
  double sum = 0.0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    sum += h[i].weight;
    CHECK(h[i].weight >= kSpectralWeightFloor);
    if (i) CHECK(h[i].energy >= h[i - 1].energy);
  }
  CHECK(sum == doctest::Approx(s.t0_norm).epsilon(1e-10));
  // paired structure: the heaviest line has a partner within 0.2 of comparable weight
  const auto top = std::max_element(h.begin(), h.end(), [](auto& x, auto& y) { return x.weight < y.weight; });
  bool paired = false;
  for (const SpectralLine& l : h)
    if (&l != &*top && std::fabs(l.energy - top->energy) < 0.2 && l.weight > 0.5 * top->weight) paired = true;
  CHECK(paired);

  const std::vector<SpectralLine> g0 = spectral_histogram(decompose(build_cat(0.0, CatSign::kSymmetric), b));
  double wmax = 0.0;
  for (const SpectralLine& l : g0) wmax = std::max(wmax, l.weight);
  CHECK(wmax > 0.95);
}

TEST_CASE("revival prediction") {
  const RevivalReport a = revival_predictor(decompose(build_cat(3.0, CatSign::kSymmetric), basis(-0.2)));
  CHECK(a.found);
  CHECK(a.T_R == doctest::Approx(10.96).epsilon(0.05));
  const RevivalReport b = revival_predictor(decompose(build_cat(2.0, CatSign::kSymmetric), basis(-0.4)));
  CHECK(b.T_R == doctest::Approx(5.56).epsilon(0.05));
  CHECK(b.first.weight >= b.second.weight);
  const RevivalReport f = revival_predictor(decompose(build_cat(3.0, CatSign::kSymmetric), basis(0.0)));
  CHECK_FALSE(f.found);
  const RevivalReport weak = revival_predictor(decompose(build_cat(3.0, CatSign::kSymmetric), basis(-0.01)));
  CHECK(weak.T_R > 100.0);
}

TEST_CASE("empirical revival on a synthetic trace") {
  std::vector<double> t, y;
  for (int i = 0; i <= 400; ++i) {
    t.push_back(i * 0.05);
    y.push_back(0.6 + 0.4 * std::cos(2.0 * std::numbers::pi * t.back() / 8.0));
  }
  const auto r = empirical_revival(t, y);
  REQUIRE(r.has_value());
  CHECK(*r == doctest::Approx(8.0));
  // never dips: no revival
  CHECK_FALSE(empirical_revival(t, std::vector<double>(t.size(), 0.9)).has_value());
  // truncated excursion is not reported
  std::vector<double> half(t.begin(), t.begin() + 170), yh(y.begin(), y.begin() + 170);
  CHECK_FALSE(empirical_revival(half, yh).has_value());
}

TEST_CASE("dominant frequency detector") {
  const double spp = 64.0;
  std::vector<double> y;
  for (int i = 0; i < 20 * 64; ++i) {
    const double t = i / spp;
    y.push_back(0.02 * t + 0.001 * t * t + 0.05 * std::sin(2.0 * std::numbers::pi * 2.0 * t) * (1.0 + 0.3 * std::sin(0.3 * t)));
  }
  const FrequencyPeak p = dominant_frequency(y, spp);
  CHECK(p.frequency == doctest::Approx(2.0).epsilon(0.02));
  CHECK_THROWS_AS(dominant_frequency({1.0, 2.0}, spp), DomainError);
}

TEST_CASE("density sampling and comparison") {
  const GPSolver solver(0.0);
  const MomentumDensity n = solver.momentum_density(solver.initial(build_cat(1.0, CatSign::kSymmetric)));
  const Grid1D exact = Grid1D(256, 12.8).conjugate();
  const std::vector<double> s = sample_on(n, exact);
  for (int i = 0; i < exact.n; ++i) CHECK(s[i] == n.values[256 + 2 * i]);
  CHECK_THROWS_AS(sample_on(n, Grid1D(250, 12.0).conjugate()), GridError);
  const DensityComparison c = compare_densities(exact, s, s, s, 1.5);
  CHECK(c.l1_exact_gp == 0.0);
  CHECK(c.linf_gp_orbital == 0.0);
  std::vector<double> shifted = s;
  for (double& x : shifted) x += 0.01;
  const DensityComparison d = compare_densities(exact, s, shifted, s);
  CHECK(d.linf_exact_gp == doctest::Approx(0.01));
  CHECK(d.l1_exact_gp == doctest::Approx(0.01 * 2.0 * exact.x_max));
  CHECK_THROWS_AS(compare_densities(exact, s, std::vector<double>(3), s), GridError);
}

TEST_CASE("pearson") {
  CHECK(pearson({1, 2, 3}, {2, 4, 6}) == doctest::Approx(1.0));
  CHECK(pearson({1, 2, 3}, {3, 2, 1}) == doctest::Approx(-1.0));
}

TEST_CASE("centre-of-mass width is periodic") {
  const auto b = basis(-0.2);
  const CatSpec cat = build_cat(3.0, CatSign::kSymmetric);
  const TwoBodyState s0 = decompose(cat, b);
  const quad::Rule r = quad::trapezoid(-14.0, 14.0, 0.005);
  const double x2 = r.integrate([&](double x) { return x * x * cat.value(x) * cat.value(x); });
  CHECK(center_of_mass_x2(s0) == doctest::Approx(x2).epsilon(1e-10));
  for (double t : {0.3, 2.45}) {
    CHECK(std::fabs(center_of_mass_x2(evolve_coefficients(s0, t)) - center_of_mass_x2(evolve_coefficients(s0, t + 1.0))) < 1e-6);
  }
  // a quarter period swaps position and momentum widths; checked in the free
  // trap where the basis holds the whole state (the unevolved remainder
  // keeps its t = 0 width otherwise)
  const TwoBodyState f0 = decompose(cat, basis(0.0));
  const double p2 = r.integrate([&](double k) { return k * k * std::norm(cat.momentum(k)); });
  CHECK(center_of_mass_x2(evolve_coefficients(f0, 0.25)) == doctest::Approx(p2).epsilon(1e-9));
}
