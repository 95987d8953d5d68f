#pragma once

#include <complex>
#include <vector>

namespace twobody::linalg {

using cplx = std::complex<double>;

/// Eigenpairs of a Hermitian matrix, eigenvalues in descending order.
/// vectors holds the first `count` eigenvectors column-major:
/// vectors[c * n + i] is component i of eigenvector c.
struct HermitianEigen {
  int n = 0;
  int count = 0;
  std::vector<double> values;
  std::vector<cplx> vectors;

  const cplx* vector(int c) const { return vectors.data() + static_cast<std::size_t>(c) * n; }
};

/// Householder reduction to real tridiagonal form followed by implicit QL.
/// `a` is row-major n×n and only its lower triangle is read. n_vectors < 0
/// requests all eigenvectors, 0 only eigenvalues. Throws ConvergenceError.
HermitianEigen hermitian_eigen(const std::vector<cplx>& a, int n, int n_vectors = -1);

/// Eigenvalues (and optionally eigenvectors) of a real symmetric tridiagonal
/// matrix; d is the diagonal, e the sub-diagonal (size n-1). z, if given, is
/// an n×n row-major matrix that gets multiplied by the eigenvector matrix.
/// Results are in QL order (unsorted).
void tridiagonal_ql(std::vector<double>& d, std::vector<double> e, std::vector<double>* z);

/// Singular values of a complex m×n matrix (row-major) by one-sided Jacobi,
/// descending.
std::vector<double> singular_values(const std::vector<cplx>& a, int m, int n);

}  // namespace twobody::linalg
