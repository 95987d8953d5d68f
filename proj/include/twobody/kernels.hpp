#pragma once

// Hot loops of the exact and mean-field pipelines. Every kernel has a plain
// serial reference and an OpenMP variant with identical arithmetic order
// per output element, so the two agree bit for bit.

#include <complex>

namespace twobody::kernels {

using cplx = std::complex<double>;

/// out[i*N + j] = Σ_t sum_tab[t][i + j] * diff_tab[t][i - j + N - 1],
/// tables of length 2N - 1 per term, stored row-major by term.
void pair_sum_serial(int N, int terms, const cplx* sum_tab, const cplx* diff_tab, cplx* out);
void pair_sum_parallel(int N, int terms, const cplx* sum_tab, const cplx* diff_tab, cplx* out);

/// Lower triangle (j <= i) of out[i*N + j] = w Σ_l conj(psi[i*N+l]) psi[j*N+l];
/// the upper triangle is filled by conjugation.
void gram_serial(int N, const cplx* psi, double w, cplx* out);
void gram_parallel(int N, const cplx* psi, double w, cplx* out);

/// field[i] *= exp(-i (V[i] + g |field[i]|²) dt)
void potential_phase_serial(int n, const double* V, double g, double dt, cplx* field);
void potential_phase_parallel(int n, const double* V, double g, double dt, cplx* field);

/// field[i] *= factor[i]
void multiply_serial(int n, const cplx* factor, cplx* field);
void multiply_parallel(int n, const cplx* factor, cplx* field);

}  // namespace twobody::kernels
