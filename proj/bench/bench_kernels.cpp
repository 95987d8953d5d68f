// Serial vs OpenMP kernels at the sizes a default run uses.
// Range argument: N (grid points per axis, or field length).

#include <benchmark/benchmark.h>

#include <complex>
#include <random>
#include <vector>

#include "twobody/kernels.hpp"

using twobody::kernels::cplx;
namespace k = twobody::kernels;

namespace {

std::vector<cplx> noise(std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> d;
  std::vector<cplx> v(n);
  for (cplx& x : v) x = {d(rng), d(rng)};
  return v;
}

constexpr int kTerms = 40;  // active centre-of-mass rows in a typical L = 3 state

template <bool Par>
void BM_pair_sum(benchmark::State& st) {
  const int N = static_cast<int>(st.range(0));
  const auto s = noise(static_cast<std::size_t>(kTerms) * (2 * N - 1), 1);
  const auto d = noise(static_cast<std::size_t>(kTerms) * (2 * N - 1), 2);
  std::vector<cplx> out(static_cast<std::size_t>(N) * N);
  for (auto _ : st) {
    if constexpr (Par) k::pair_sum_parallel(N, kTerms, s.data(), d.data(), out.data());
    else k::pair_sum_serial(N, kTerms, s.data(), d.data(), out.data());
    benchmark::DoNotOptimize(out.data());
  }
}

template <bool Par>
void BM_gram(benchmark::State& st) {
  const int N = static_cast<int>(st.range(0));
  const auto psi = noise(static_cast<std::size_t>(N) * N, 3);
  std::vector<cplx> out(psi.size());
  for (auto _ : st) {
    if constexpr (Par) k::gram_parallel(N, psi.data(), 0.25, out.data());
    else k::gram_serial(N, psi.data(), 0.25, out.data());
    benchmark::DoNotOptimize(out.data());
  }
}

template <bool Par>
void BM_potential_phase(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  auto f = noise(n, 4);
  std::vector<double> V(n);
  for (int i = 0; i < n; ++i) V[i] = 0.5 * (i - n / 2) * (i - n / 2) * 1e-4;
  for (auto _ : st) {
    if constexpr (Par) k::potential_phase_parallel(n, V.data(), -0.2, 7.8e-4, f.data());
    else k::potential_phase_serial(n, V.data(), -0.2, 7.8e-4, f.data());
    benchmark::DoNotOptimize(f.data());
  }
}

template <bool Par>
void BM_multiply(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  auto f = noise(n, 5);
  auto g = noise(n, 6);
  for (cplx& x : g) x /= std::abs(x);  // unit modulus so repeated products stay bounded
  for (auto _ : st) {
    if constexpr (Par) k::multiply_parallel(n, g.data(), f.data());
    else k::multiply_serial(n, g.data(), f.data());
    benchmark::DoNotOptimize(f.data());
  }
}

}  // namespace

BENCHMARK(BM_pair_sum<false>)->Name("pair_sum/serial")->Arg(128)->Arg(256)->Arg(512);
BENCHMARK(BM_pair_sum<true>)->Name("pair_sum/parallel")->Arg(128)->Arg(256)->Arg(512)->UseRealTime();
BENCHMARK(BM_gram<false>)->Name("gram/serial")->Arg(128)->Arg(256)->Arg(512);
BENCHMARK(BM_gram<true>)->Name("gram/parallel")->Arg(128)->Arg(256)->Arg(512)->UseRealTime();
BENCHMARK(BM_potential_phase<false>)->Name("potential_phase/serial")->Arg(1024)->Arg(8192);
BENCHMARK(BM_potential_phase<true>)->Name("potential_phase/parallel")->Arg(1024)->Arg(8192)->UseRealTime();
BENCHMARK(BM_multiply<false>)->Name("multiply/serial")->Arg(1024)->Arg(8192);
BENCHMARK(BM_multiply<true>)->Name("multiply/parallel")->Arg(1024)->Arg(8192)->UseRealTime();

BENCHMARK_MAIN();
