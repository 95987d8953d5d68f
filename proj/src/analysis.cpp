#include "twobody/analysis.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

#include "twobody/error.hpp"
#include "twobody/fourier.hpp"

namespace twobody {

Measures measures(const std::vector<double>& eigenvalues) {
  std::vector<double> l(eigenvalues.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < l.size(); ++i) {
    l[i] = std::clamp(eigenvalues[i], 0.0, 1.0);
    sum += l[i];
  }
  Measures m;
  if (sum <= 0.0) return m;
  double p = 0.0, s = 0.0;
  for (double& x : l) {
    x /= sum;
    p += x * x;
    if (x > kEntropyFloor) s -= x * std::log(x);
  }
  m.K = 1.0 / p;
  m.S = s;
  return m;
}

Measures measures(const NaturalOrbitalSet& orbitals) { return measures(orbitals.eigenvalues); }

void BranchTracker::push(const NaturalOrbitalSet& set) {
  if (set.orbitals.empty()) throw DomainError("BranchTracker: orbital set carries no orbitals");
  int pick = 0;
  double best = 1.0;
  if (!current_.empty()) {
    if (current_.size() != set.orbitals[0].size()) throw GridError("BranchTracker: grid changed between samples");
    best = -1.0;
    for (std::size_t c = 0; c < set.orbitals.size(); ++c) {
      cplx ip = 0.0;
      for (std::size_t i = 0; i < current_.size(); ++i) ip += std::conj(current_[i]) * set.orbitals[c][i];
      const double ov = std::abs(ip) * dk_;
      if (ov > best) {
        best = ov;
        pick = static_cast<int>(c);
      }
    }
  }
  dk_ = set.grid.step();
  current_ = set.orbitals[pick];
  occupation_.push_back(set.eigenvalues[pick]);
  rank_.push_back(pick);
  overlap_.push_back(best);
}

std::vector<SpectralLine> spectral_histogram(const TwoBodyState& s) {
  const EigenBasis& b = *s.basis;
  std::vector<SpectralLine> out;
  for (int n = 0; n < b.n_cm(); ++n) {
    for (int j = 0; j < b.m_rel(); ++j) {
      const double w = std::norm(s.alpha0[static_cast<std::size_t>(n) * b.m_rel() + j]);
      if (w >= kSpectralWeightFloor) out.push_back({b.cm[n].energy + b.rel[j].energy, w, n, b.rel[j].m});
    }
  }
  std::sort(out.begin(), out.end(), [](const SpectralLine& x, const SpectralLine& y) {
    return x.energy != y.energy ? x.energy < y.energy : x.n < y.n;
  });
  return out;
}

RevivalReport revival_predictor(const TwoBodyState& s) {
  const std::vector<SpectralLine> lines = spectral_histogram(s);
  RevivalReport r;
  double best = -1.0;
  // lines are energy sorted, so the inner loop stops at the gap threshold
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t k = i + 1; k < lines.size() && lines[k].energy - lines[i].energy < kPairGapThreshold; ++k) {
      const double gap = lines[k].energy - lines[i].energy;
      if (gap <= 1e-12) continue;  // exact degeneracy never dephases
      const double w = lines[i].weight + lines[k].weight;
      if (w > best) {
        best = w;
        r.first = lines[i].weight >= lines[k].weight ? lines[i] : lines[k];
        r.second = lines[i].weight >= lines[k].weight ? lines[k] : lines[i];
        r.delta = gap;
      }
    }
  }
  if (best < 0.0) return r;
  r.found = true;
  r.T_R = 1.0 / r.delta;
  return r;
}

std::optional<double> empirical_revival(const std::vector<double>& times, const std::vector<double>& occupation) {
  if (times.size() != occupation.size()) throw DomainError("empirical_revival: length mismatch");
  if (occupation.empty()) return std::nullopt;
  const double level = kRevivalDipFraction * occupation.front();
  std::size_t i = 0;
  while (i < occupation.size() && occupation[i] >= level) ++i;
  while (i < occupation.size() && occupation[i] < level) ++i;
  if (i == occupation.size()) return std::nullopt;
  std::size_t arg = i;
  for (; i < occupation.size() && occupation[i] >= level; ++i)
    if (occupation[i] > occupation[arg]) arg = i;
  // an excursion cut off by the end of the series has no reliable maximum
  if (i == occupation.size()) return std::nullopt;
  return times[arg];
}

std::vector<double> sample_on(const MomentumDensity& n, const Grid1D& target) {
  const double d = n.grid.step();
  std::vector<double> out(target.n);
  for (int i = 0; i < target.n; ++i) {
    const double p = (target.at(i) - n.grid.at(0)) / d;
    const double r = std::nearbyint(p);
    if (std::fabs(p - r) > 1e-9 || r < 0 || r >= n.grid.n) {
      throw GridError("sample_on: target grid is not a subset of the source grid");
    }
    out[i] = n.values[static_cast<std::size_t>(r)];
  }
  return out;
}

DensityComparison compare_densities(const Grid1D& grid, const std::vector<double>& exact,
                                    const std::vector<double>& gp, const std::vector<double>& orbital1, double time) {
  const std::size_t n = static_cast<std::size_t>(grid.n);
  if (exact.size() != n || gp.size() != n || orbital1.size() != n) throw GridError("compare_densities: size mismatch");
  const auto dist = [&](const std::vector<double>& a, const std::vector<double>& b, double& l1, double& linf) {
    l1 = 0.0;
    linf = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double d = std::fabs(a[i] - b[i]);
      l1 += d;
      linf = std::max(linf, d);
    }
    l1 *= grid.step();
  };
  DensityComparison c;
  c.time = time;
  dist(exact, gp, c.l1_exact_gp, c.linf_exact_gp);
  dist(gp, orbital1, c.l1_gp_orbital, c.linf_gp_orbital);
  dist(exact, orbital1, c.l1_exact_orbital, c.linf_exact_orbital);
  return c;
}

double pearson(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size() || a.size() < 2) throw DomainError("pearson: need two equal series of length >= 2");
  const double n = static_cast<double>(a.size());
  const double ma = std::accumulate(a.begin(), a.end(), 0.0) / n;
  const double mb = std::accumulate(b.begin(), b.end(), 0.0) / n;
  double sab = 0.0, saa = 0.0, sbb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sab += (a[i] - ma) * (b[i] - mb);
    saa += (a[i] - ma) * (a[i] - ma);
    sbb += (b[i] - mb) * (b[i] - mb);
  }
  if (saa == 0.0 || sbb == 0.0) return 0.0;
  return sab / std::sqrt(saa * sbb);
}

namespace {
// least-squares cubic on u in [-1, 1], returned as residual
std::vector<double> remove_cubic(const std::vector<double>& y) {
  const std::size_t n = y.size();
  std::array<std::array<double, 5>, 4> m{};
  for (std::size_t i = 0; i < n; ++i) {
    const double u = n > 1 ? 2.0 * i / (n - 1) - 1.0 : 0.0;
    const std::array<double, 4> p{1.0, u, u * u, u * u * u};
    for (int r = 0; r < 4; ++r) {
      for (int c = 0; c < 4; ++c) m[r][c] += p[r] * p[c];
      m[r][4] += p[r] * y[i];
    }
  }
  // Gaussian elimination with partial pivoting
  for (int c = 0; c < 4; ++c) {
    int piv = c;
    for (int r = c + 1; r < 4; ++r)
      if (std::fabs(m[r][c]) > std::fabs(m[piv][c])) piv = r;
    std::swap(m[c], m[piv]);
    if (m[c][c] == 0.0) return y;
    for (int r = c + 1; r < 4; ++r) {
      const double f = m[r][c] / m[c][c];
      for (int k = c; k < 5; ++k) m[r][k] -= f * m[c][k];
    }
  }
  std::array<double, 4> coef{};
  for (int r = 3; r >= 0; --r) {
    double s = m[r][4];
    for (int k = r + 1; k < 4; ++k) s -= m[r][k] * coef[k];
    coef[r] = s / m[r][r];
  }
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double u = n > 1 ? 2.0 * i / (n - 1) - 1.0 : 0.0;
    out[i] = y[i] - (coef[0] + u * (coef[1] + u * (coef[2] + u * coef[3])));
  }
  return out;
}
}  // namespace

FrequencyPeak dominant_frequency(const std::vector<double>& series, double samples_per_period, double min_frequency) {
  const std::size_t n = series.size();
  if (n < 8) throw DomainError("dominant_frequency: series too short");
  if (!(samples_per_period > 0.0)) throw DomainError("dominant_frequency: bad sampling rate");
  const std::vector<double> r = remove_cubic(series);
  const std::size_t padded = 8 * n;
  std::vector<cplx> buf(padded, 0.0);
  const double two_pi = 2.0 * std::acos(-1.0);
  for (std::size_t i = 0; i < n; ++i) buf[i] = r[i] * 0.5 * (1.0 - std::cos(two_pi * i / (n - 1)));
  const fourier::Plan1D plan(static_cast<int>(padded));
  plan.forward(buf.data());
  FrequencyPeak best;
  for (std::size_t p = 1; p <= padded / 2; ++p) {
    const double f = static_cast<double>(p) / padded * samples_per_period;
    if (f < min_frequency) continue;
    const double pw = std::norm(buf[p]);
    if (pw > best.power) best = {f, pw};
  }
  return best;
}

double center_of_mass_x2(const TwoBodyState& s) {
  // Φ0⊗Φ0 part exactly, minus what the basis already represents at t = 0,
  // plus the basis part at t: X² couples n to n and n ± 2 only.
  const EigenBasis& b = *s.basis;
  const auto quad = [&](const std::vector<cplx>& a) {
    double q = 0.0;
    for (int j = 0; j < b.m_rel(); ++j) {
      for (int n = 0; n < b.n_cm(); ++n) {
        const cplx x = a[static_cast<std::size_t>(n) * b.m_rel() + j];
        q += (n + 0.5) * std::norm(x);
        if (n + 2 < b.n_cm()) {
          const cplx y = a[static_cast<std::size_t>(n + 2) * b.m_rel() + j];
          q += std::sqrt((n + 1.0) * (n + 2.0)) * (std::conj(x) * y).real();
        }
      }
    }
    return q;
  };
  const CatSpec& c = s.initial;
  const double exact = c.norm * c.norm * std::sqrt(std::acos(-1.0)) *
                       (2.0 * c.L * c.L + 1.0 + c.sigma() * std::exp(-c.L * c.L));
  return exact + quad(s.alpha) - quad(s.alpha0);
}

}  // namespace twobody
