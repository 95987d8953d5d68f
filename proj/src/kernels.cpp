#include "twobody/kernels.hpp"

#include <cmath>
#include <cstddef>

namespace twobody::kernels {

namespace {

inline void pair_sum_row(int N, int terms, const cplx* sum_tab, const cplx* diff_tab, cplx* out, int i) {
  const std::size_t len = 2 * static_cast<std::size_t>(N) - 1;
  cplx* row = out + static_cast<std::size_t>(i) * N;
  for (int j = 0; j < N; ++j) row[j] = 0.0;
  for (int t = 0; t < terms; ++t) {
    const cplx* s = sum_tab + t * len + i;           // s[j]  -> index i + j
    const cplx* d = diff_tab + t * len + i + N - 1;  // d[-j] -> index i - j + N - 1
    for (int j = 0; j < N; ++j) row[j] += s[j] * d[-j];
  }
}

inline void gram_row(int N, const cplx* psi, double w, cplx* out, int i) {
  const cplx* pi = psi + static_cast<std::size_t>(i) * N;
  for (int j = 0; j <= i; ++j) {
    const cplx* pj = psi + static_cast<std::size_t>(j) * N;
    double re = 0.0, im = 0.0;
    #pragma omp simd reduction(+ : re, im)
    for (int l = 0; l < N; ++l) {
      // conj(a) * b
      re += pi[l].real() * pj[l].real() + pi[l].imag() * pj[l].imag();
      im += pi[l].real() * pj[l].imag() - pi[l].imag() * pj[l].real();
    }
    out[static_cast<std::size_t>(i) * N + j] = cplx(w * re, w * im);
  }
}

inline void mirror(int N, cplx* out) {
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j) out[static_cast<std::size_t>(i) * N + j] = std::conj(out[static_cast<std::size_t>(j) * N + i]);
}

inline void phase_one(const double* V, double g, double dt, cplx* f, int i) {
  const double arg = -(V[i] + g * std::norm(f[i])) * dt;
  f[i] *= cplx(std::cos(arg), std::sin(arg));
}

}  // namespace

void pair_sum_serial(int N, int terms, const cplx* sum_tab, const cplx* diff_tab, cplx* out) {
  for (int i = 0; i < N; ++i) pair_sum_row(N, terms, sum_tab, diff_tab, out, i);
}

void pair_sum_parallel(int N, int terms, const cplx* sum_tab, const cplx* diff_tab, cplx* out) {
  #pragma omp parallel for schedule(static)
  for (int i = 0; i < N; ++i) pair_sum_row(N, terms, sum_tab, diff_tab, out, i);
}

void gram_serial(int N, const cplx* psi, double w, cplx* out) {
  for (int i = 0; i < N; ++i) gram_row(N, psi, w, out, i);
  mirror(N, out);
}

void gram_parallel(int N, const cplx* psi, double w, cplx* out) {
  // triangular rows: dynamic scheduling balances the work
  #pragma omp parallel for schedule(dynamic, 4)
  for (int i = 0; i < N; ++i) gram_row(N, psi, w, out, i);
  mirror(N, out);
}

void potential_phase_serial(int n, const double* V, double g, double dt, cplx* field) {
  for (int i = 0; i < n; ++i) phase_one(V, g, dt, field, i);
}

void potential_phase_parallel(int n, const double* V, double g, double dt, cplx* field) {
  #pragma omp parallel for schedule(static)
  for (int i = 0; i < n; ++i) phase_one(V, g, dt, field, i);
}

void multiply_serial(int n, const cplx* factor, cplx* field) {
  for (int i = 0; i < n; ++i) field[i] *= factor[i];
}

void multiply_parallel(int n, const cplx* factor, cplx* field) {
  #pragma omp parallel for schedule(static)
  for (int i = 0; i < n; ++i) field[i] *= factor[i];
}

}  // namespace twobody::kernels
