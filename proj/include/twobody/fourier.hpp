#pragma once

#include <complex>
#include <vector>

namespace twobody::fourier {

using cplx = std::complex<double>;

/// In-place unnormalized complex DFT of fixed size, FFTW backed.
/// forward: X_p = Σ_j x_j e^{-2πi pj/N}; inverse uses e^{+2πi pj/N}.
/// Planning is serialized internally; execute() is safe from several threads
/// on distinct arrays.
class Plan1D {
 public:
  explicit Plan1D(int n);
  ~Plan1D();
  Plan1D(const Plan1D&) = delete;
  Plan1D& operator=(const Plan1D&) = delete;

  int size() const { return n_; }
  void forward(cplx* data) const;
  void inverse(cplx* data) const;

 private:
  int n_;
  void* fwd_;
  void* inv_;
};

/// Same for a row-major n×n array.
class Plan2D {
 public:
  explicit Plan2D(int n);
  ~Plan2D();
  Plan2D(const Plan2D&) = delete;
  Plan2D& operator=(const Plan2D&) = delete;

  int size() const { return n_; }
  void forward(cplx* data) const;

 private:
  int n_;
  void* fwd_;
};

}  // namespace twobody::fourier
