#include "twobody/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "twobody/error.hpp"

namespace twobody::linalg {

void tridiagonal_ql(std::vector<double>& d, std::vector<double> e_in, std::vector<double>* z) {
  const int n = static_cast<int>(d.size());
  if (n == 0) return;
  std::vector<double> e(n, 0.0);
  for (int i = 0; i + 1 < n; ++i) e[i] = e_in[i];
  double anorm = 0.0;
  for (int i = 0; i < n; ++i) anorm = std::max(anorm, std::fabs(d[i]) + std::fabs(e[i]) + (i ? std::fabs(e[i - 1]) : 0.0));
  const double floor = 2.2e-16 * anorm;
  // rotations act on columns of z; work on z^T so they touch contiguous rows
  std::vector<double> zt;
  if (z) {
    zt.resize(z->size());
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) zt[c * n + r] = (*z)[r * n + c];
  }
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
        if (std::fabs(e[m]) <= 2.2e-16 * dd || std::fabs(e[m]) <= floor) break;
      }
      if (m != l) {
        if (++iter > 60) throw ConvergenceError("tridiagonal_ql: no convergence");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        int i;
        for (i = m - 1; i >= l; --i) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          if (z) {
            double* zi = zt.data() + static_cast<std::size_t>(i) * n;
            double* zj = zi + n;
            for (int k = 0; k < n; ++k) {
              f = zj[k];
              zj[k] = s * zi[k] + c * f;
              zi[k] = c * zi[k] - s * f;
            }
          }
        }
        if (r == 0.0 && i >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
  if (z) {
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) (*z)[r * n + c] = zt[c * n + r];
  }
}

HermitianEigen hermitian_eigen(const std::vector<cplx>& a_in, int n, int n_vectors) {
  if (n <= 0 || a_in.size() != static_cast<std::size_t>(n) * n) throw DomainError("hermitian_eigen: bad shape");
  if (n_vectors < 0 || n_vectors > n) n_vectors = n;
  // work on the lower triangle, mirrored so that full rows are contiguous
  std::vector<cplx> a(a_in.size());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) {
      a[i * n + j] = a_in[i * n + j];
      a[j * n + i] = std::conj(a_in[i * n + j]);
    }
    a[i * n + i] = a_in[i * n + i].real();
  }

  double fro2 = 0.0;
  for (const cplx& v : a) fro2 += std::norm(v);
  // columns whose tail is this small are treated as reduced; keeps h away from underflow
  const double negligible2 = 1e-36 * fro2;

  // Householder reflectors P = I - u u^H / h, applied as A <- P A P
  std::vector<std::vector<cplx>> us;
  std::vector<double> hs;
  std::vector<cplx> p(n);
  for (int k = 0; k + 2 < n; ++k) {
    const int m = n - k - 1;
    double tail2 = 0.0;
    for (int i = k + 2; i < n; ++i) tail2 += std::norm(a[i * n + k]);
    const cplx x0 = a[(k + 1) * n + k];
    const double ax0 = std::abs(x0);
    const double xnorm = std::sqrt(tail2 + ax0 * ax0);
    if (tail2 <= negligible2) {
      for (int i = k + 2; i < n; ++i) {
        a[i * n + k] = 0.0;
        a[k * n + i] = 0.0;
      }
      us.emplace_back();
      hs.push_back(0.0);
      continue;  // already reduced in this column
    }
    const cplx phase = ax0 > 0.0 ? x0 / ax0 : cplx(1.0, 0.0);
    std::vector<cplx> u(m);
    for (int i = 0; i < m; ++i) u[i] = a[(k + 1 + i) * n + k];
    u[0] += phase * xnorm;
    const double h = xnorm * (xnorm + ax0);
    // p = A22 u / h
    for (int i = 0; i < m; ++i) {
      cplx s = 0.0;
      const cplx* row = &a[(k + 1 + i) * n + k + 1];
      for (int j = 0; j < m; ++j) s += row[j] * u[j];
      p[i] = s / h;
    }
    cplx upk = 0.0;
    for (int i = 0; i < m; ++i) upk += std::conj(u[i]) * p[i];
    const double K = upk.real() / (2.0 * h);
    for (int i = 0; i < m; ++i) p[i] -= K * u[i];
    for (int i = 0; i < m; ++i) {
      cplx* row = &a[(k + 1 + i) * n + k + 1];
      for (int j = 0; j < m; ++j) row[j] -= p[i] * std::conj(u[j]) + u[i] * std::conj(p[j]);
    }
    // column k below the diagonal becomes -phase*|x| e1
    a[(k + 1) * n + k] = -phase * xnorm;
    a[k * n + k + 1] = std::conj(a[(k + 1) * n + k]);
    for (int i = k + 2; i < n; ++i) {
      a[i * n + k] = 0.0;
      a[k * n + i] = 0.0;
    }
    us.push_back(std::move(u));
    hs.push_back(h);
  }

  // diagonal phase similarity: complex sub-diagonal -> |sub-diagonal|
  std::vector<double> d(n), e(n > 1 ? n - 1 : 0);
  std::vector<cplx> phase(n, cplx(1.0, 0.0));
  for (int i = 0; i < n; ++i) d[i] = a[i * n + i].real();
  for (int i = 0; i + 1 < n; ++i) {
    const cplx c = a[(i + 1) * n + i];
    const double ac = std::abs(c);
    e[i] = ac;
    phase[i + 1] = ac > 0.0 ? phase[i] * c / ac : phase[i];
  }

  HermitianEigen out;
  out.n = n;
  out.count = n_vectors;
  std::vector<double> z;
  if (n_vectors > 0) {
    z.assign(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) z[i * n + i] = 1.0;
  }
  tridiagonal_ql(d, e, n_vectors > 0 ? &z : nullptr);

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) { return d[x] > d[y]; });
  out.values.resize(n);
  for (int i = 0; i < n; ++i) out.values[i] = d[order[i]];
  if (n_vectors == 0) return out;

  out.vectors.assign(static_cast<std::size_t>(n) * n_vectors, 0.0);
  for (int c = 0; c < n_vectors; ++c) {
    cplx* v = out.vectors.data() + static_cast<std::size_t>(c) * n;
    for (int i = 0; i < n; ++i) v[i] = phase[i] * z[i * n + order[c]];
    // apply P_0 P_1 ... P_{n-3}: right-most first
    for (int k = static_cast<int>(us.size()) - 1; k >= 0; --k) {
      if (hs[k] == 0.0) continue;
      const std::vector<cplx>& u = us[k];
      cplx s = 0.0;
      for (std::size_t i = 0; i < u.size(); ++i) s += std::conj(u[i]) * v[k + 1 + i];
      s /= hs[k];
      for (std::size_t i = 0; i < u.size(); ++i) v[k + 1 + i] -= s * u[i];
    }
  }
  return out;
}

std::vector<double> singular_values(const std::vector<cplx>& a, int m, int n) {
  if (a.size() != static_cast<std::size_t>(m) * n) throw DomainError("singular_values: bad shape");
  // columns stored contiguously
  std::vector<cplx> g(static_cast<std::size_t>(m) * n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) g[static_cast<std::size_t>(j) * m + i] = a[static_cast<std::size_t>(i) * n + j];
  double frob = 0.0;
  for (const cplx& x : g) frob += std::norm(x);
  const double negligible = 1e-30 * frob;
  for (int sweep = 0; sweep < 60; ++sweep) {
    bool rotated = false;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        cplx* gp = &g[static_cast<std::size_t>(p) * m];
        cplx* gq = &g[static_cast<std::size_t>(q) * m];
        double alpha = 0.0, beta = 0.0;
        cplx gamma = 0.0;
        for (int i = 0; i < m; ++i) {
          alpha += std::norm(gp[i]);
          beta += std::norm(gq[i]);
          gamma += std::conj(gp[i]) * gq[i];
        }
        const double ag = std::abs(gamma);
        if (ag == 0.0 || ag <= 1e-14 * std::sqrt(alpha * beta) || std::min(alpha, beta) <= negligible) continue;
        rotated = true;
        const cplx ph = gamma / ag;
        const double zeta = (beta - alpha) / (2.0 * ag);
        const double t = (zeta >= 0 ? 1.0 : -1.0) / (std::fabs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (int i = 0; i < m; ++i) {
          const cplx x = gp[i];
          const cplx y = gq[i] * std::conj(ph);
          gp[i] = c * x - s * y;
          gq[i] = s * x + c * y;
        }
      }
    }
    if (!rotated) {
      std::vector<double> sv(n);
      for (int j = 0; j < n; ++j) {
        double s = 0.0;
        for (int i = 0; i < m; ++i) s += std::norm(g[static_cast<std::size_t>(j) * m + i]);
        sv[j] = std::sqrt(s);
      }
      std::sort(sv.begin(), sv.end(), std::greater<>());
      return sv;
    }
  }
  throw ConvergenceError("singular_values: Jacobi sweeps did not converge");
}

}  // namespace twobody::linalg
