#include "twobody/fourier.hpp"

#include <fftw3.h>

#include <mutex>

#include "twobody/error.hpp"

namespace twobody::fourier {

namespace {

std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

// plans are made on scratch buffers with FFTW_ESTIMATE (deterministic, no
// timing) and later run on caller arrays through the new-array interface
fftw_plan make_1d(int n, int sign) {
  std::lock_guard<std::mutex> lock(planner_mutex());
  fftw_complex* buf = fftw_alloc_complex(n);
  fftw_plan p = fftw_plan_dft_1d(n, buf, buf, sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
  fftw_free(buf);
  if (!p) throw Error("fftw: planning failed");
  return p;
}

}  // namespace

Plan1D::Plan1D(int n) : n_(n) {
  if (n <= 0) throw DomainError("Plan1D: size must be positive");
  fwd_ = make_1d(n, FFTW_FORWARD);
  inv_ = make_1d(n, FFTW_BACKWARD);
}

Plan1D::~Plan1D() {
  std::lock_guard<std::mutex> lock(planner_mutex());
  fftw_destroy_plan(static_cast<fftw_plan>(fwd_));
  fftw_destroy_plan(static_cast<fftw_plan>(inv_));
}

void Plan1D::forward(cplx* data) const {
  auto* d = reinterpret_cast<fftw_complex*>(data);
  fftw_execute_dft(static_cast<fftw_plan>(fwd_), d, d);
}

void Plan1D::inverse(cplx* data) const {
  auto* d = reinterpret_cast<fftw_complex*>(data);
  fftw_execute_dft(static_cast<fftw_plan>(inv_), d, d);
}

Plan2D::Plan2D(int n) : n_(n) {
  if (n <= 0) throw DomainError("Plan2D: size must be positive");
  std::lock_guard<std::mutex> lock(planner_mutex());
  fftw_complex* buf = fftw_alloc_complex(static_cast<std::size_t>(n) * n);
  fwd_ = fftw_plan_dft_2d(n, n, buf, buf, FFTW_FORWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
  fftw_free(buf);
  if (!fwd_) throw Error("fftw: planning failed");
}

Plan2D::~Plan2D() {
  std::lock_guard<std::mutex> lock(planner_mutex());
  fftw_destroy_plan(static_cast<fftw_plan>(fwd_));
}

void Plan2D::forward(cplx* data) const {
  auto* d = reinterpret_cast<fftw_complex*>(data);
  fftw_execute_dft(static_cast<fftw_plan>(fwd_), d, d);
}

}  // namespace twobody::fourier
