#include "twobody/runner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>

#include "twobody/error.hpp"
#include "twobody/parallel.hpp"

namespace twobody {

namespace {

constexpr int kTrackedOrbitals = 8;
constexpr int kChunk = 64;
constexpr int kSchmidtCompared = 10;

struct Sample {
  std::vector<double> eig;
  std::vector<std::vector<cplx>> orbitals;
  std::vector<double> n_exact;
  double norm = 0.0;
  double trace = 0.0;
};

InvariantCheck upper(const std::string& name, double value, double limit, const std::string& detail = "") {
  return {name, value <= limit, value, limit, detail};
}

void write_text(const std::filesystem::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw Error("cannot write " + p.string());
  out << text;
}

nlohmann::ordered_json line_json(const SpectralLine& l) {
  return {{"energy", l.energy}, {"weight", l.weight}, {"n", l.n}, {"m", l.m}};
}

}  // namespace

std::string format_number(double x) {
  if (x == 0.0) return "0";  // folds -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

bool RunResult::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const InvariantCheck& c) { return c.passed; });
}

RunResult simulate(const RunConfig& cfg, std::ostream* log) {
  validate(cfg);
  const auto start = std::chrono::steady_clock::now();
  RunResult r;
  r.config = cfg;

  const auto basis = std::make_shared<const EigenBasis>(build_basis(TrapModel{cfg.g, cfg.convention}, cfg.basis));
  const CatSpec cat = build_cat(cfg.L, cfg.cat_sign);
  const TwoBodyState s0 = decompose(cat, basis, cfg.truncation_tolerance);
  r.completeness = s0.t0_norm;
  r.spectrum = spectral_histogram(s0);
  r.revival = revival_predictor(s0);
  r.k_grid = Grid1D(cfg.n_g, cfg.x_max).conjugate();
  const int N = r.k_grid.n;
  const int count = cfg.sample_count();
  for (int i = 0; i < count; ++i) r.times.push_back(cfg.sample_time(i));
  if (log) *log << "basis ready, completeness " << format_number(r.completeness) << ", " << count << " samples\n";

  std::vector<char> snapshot(count, 0);
  if (cfg.wants(Output::kDensities)) {
    for (int k = 0;; ++k) {
      const double t = k * cfg.density_interval;
      if (t > cfg.periods + 1e-9) break;
      snapshot[std::min<long>(count - 1, std::lround(t * cfg.samples_per_period))] = 1;
    }
  }

  // mean field first; it is sequential in time and light
  std::vector<std::vector<double>> gp_density;
  if (cfg.needs_gp()) {
    r.has_gp = true;
    const GPSolver solver(cfg.g, cfg.gp);
    GPField f = solver.initial(cat);
    for (int i = 0; i < count; ++i) {
      solver.advance_to(f, r.times[i]);
      const MomentumDensity n = solver.momentum_density(f);
      double par = 0.0;
      for (int p = 1; p < n.grid.n; ++p) par = std::max(par, std::fabs(n.values[p] - n.values[n.grid.mirror(p)]));
      r.gp_norm.push_back(f.norm2());
      r.gp_energy.push_back(solver.energy(f));
      r.gp_parity.push_back(par);
      gp_density.push_back(sample_on(n, r.k_grid));
    }
    if (log) *log << "mean-field propagation done\n";
  }

  std::vector<int> schmidt_idx;
  for (int k = 0; k < cfg.schmidt_checks; ++k) schmidt_idx.push_back(static_cast<int>((k + 1.0) * (count - 1) / (cfg.schmidt_checks + 1)));
  std::unique_ptr<SchmidtOracle> oracle;
  if (!schmidt_idx.empty()) oracle = std::make_unique<SchmidtOracle>(*basis, cfg.schmidt_order);

  const MomentumAssembler assembler(*basis, r.k_grid);
  BranchTracker tracker;
  const int n_orb = std::min(kTrackedOrbitals, N);
  double eig_min = 1.0, eig_max = 0.0, eig_sum_dev = 0.0, trace_dev = 0.0;
  double k_min = 1e300, s_min = 1e300;

  for (int c0 = 0; c0 < count; c0 += kChunk) {
    const int c1 = std::min(count, c0 + kChunk);
    std::vector<Sample> chunk(c1 - c0);
    parallel_for(c1 - c0, [&](int k) {
      const int i = c0 + k;
      const MomentumWavefunction psi = assembler.assemble(evolve_coefficients(s0, r.times[i]), Exec::kSerial);
      const DensityMatrix rho = reduce_density_matrix(psi, Exec::kSerial);
      NaturalOrbitalSet no = natural_orbitals(rho, n_orb);
      Sample& s = chunk[k];
      s.norm = psi.norm2();
      s.trace = rho.trace();
      s.n_exact = rho.diagonal();
      s.eig = std::move(no.eigenvalues);
      s.orbitals = std::move(no.orbitals);
    });
    for (int k = 0; k < c1 - c0; ++k) {
      const int i = c0 + k;
      Sample& s = chunk[k];
      NaturalOrbitalSet set;
      set.grid = r.k_grid;
      set.time = r.times[i];
      set.eigenvalues = s.eig;
      set.orbitals = std::move(s.orbitals);
      tracker.push(set);

      r.norm.push_back(s.norm);
      trace_dev = std::max(trace_dev, std::fabs(s.trace - 1.0));
      double sum = 0.0;
      for (double l : s.eig) {
        sum += l;
        eig_min = std::min(eig_min, l);
        eig_max = std::max(eig_max, l);
      }
      eig_sum_dev = std::max(eig_sum_dev, std::fabs(sum - 1.0));
      const Measures m = measures(s.eig);
      k_min = std::min(k_min, m.K);
      s_min = std::min(s_min, m.S);
      r.series.times.push_back(r.times[i]);
      r.series.K.push_back(m.K);
      r.series.S.push_back(m.S);
      std::vector<double> top(s.eig.begin(), s.eig.begin() + std::min<std::size_t>(cfg.n_lambdas, s.eig.size()));
      r.series.lambdas.push_back(top);
      r.lambdas.push_back(top);

      double par = 0.0;
      for (int p = 1; p < N; ++p) par = std::max(par, std::fabs(s.n_exact[p] - s.n_exact[r.k_grid.mirror(p)]));
      r.exact_parity.push_back(par);
      r.cm_x2.push_back(center_of_mass_x2(evolve_coefficients(s0, r.times[i])));

      std::vector<double> orb(N);
      for (int p = 0; p < N; ++p) orb[p] = std::norm(tracker.orbital()[p]);
      if (r.has_gp) r.comparison.push_back(compare_densities(r.k_grid, s.n_exact, gp_density[i], orb, r.times[i]));
      if (snapshot[i]) r.densities.push_back({r.times[i], s.n_exact, r.has_gp ? gp_density[i] : std::vector<double>(N, 0.0), orb});

      if (std::find(schmidt_idx.begin(), schmidt_idx.end(), i) != schmidt_idx.end()) {
        const SchmidtWeights w = oracle->weights(evolve_coefficients(s0, r.times[i]));
        double dev = 0.0;
        for (int q = 0; q < kSchmidtCompared && q < N; ++q) dev = std::max(dev, std::fabs(w.weights[q] - s.eig[q]));
        r.schmidt_times.push_back(r.times[i]);
        r.schmidt_deviation.push_back(dev);
      }
    }
    if (log) *log << "  " << c1 << "/" << count << " samples\n";
  }
  r.branch = tracker.occupation();
  r.branch_rank = tracker.rank();
  r.branch_overlap = tracker.overlap();

  // invariants
  double norm_dev = 0.0;
  for (double n : r.norm) norm_dev = std::max(norm_dev, std::fabs(n - 1.0));
  r.checks.push_back(upper("completeness_loss", 1.0 - r.completeness, cfg.truncation_tolerance));
  r.checks.push_back(upper("psi_norm", norm_dev, 1e-6));
  r.checks.push_back(upper("rho_trace", trace_dev, 1e-6));
  r.checks.push_back(upper("eigenvalue_floor", -eig_min, 1e-10));
  r.checks.push_back(upper("eigenvalue_ceiling", eig_max - 1.0, 1e-10));
  r.checks.push_back(upper("eigenvalue_sum", eig_sum_dev, 1e-6));
  r.checks.push_back(upper("K_floor", 1.0 - k_min, 1e-9));
  r.checks.push_back(upper("S_floor", -s_min, 1e-12));
  r.checks.push_back(upper("initial_K", std::fabs(r.series.K.front() - 1.0), 1e-6));
  r.checks.push_back(upper("initial_S", r.series.S.front(), 1e-6));
  double cm_dev = 0.0;
  const int spp = cfg.samples_per_period;
  for (int i = 0; i + spp < count; ++i) cm_dev = std::max(cm_dev, std::fabs(r.cm_x2[i + spp] - r.cm_x2[i]));
  r.checks.push_back(upper("cm_x2_periodicity", cm_dev, 1e-6));
  if (!r.schmidt_deviation.empty()) {
    r.checks.push_back(upper("dual_method_spectrum", *std::max_element(r.schmidt_deviation.begin(), r.schmidt_deviation.end()), 1e-6));
  }
  if (cfg.cat_sign == CatSign::kSymmetric) {
    r.checks.push_back(upper("exact_density_parity", *std::max_element(r.exact_parity.begin(), r.exact_parity.end()), 1e-8));
  }
  if (r.has_gp) {
    double nd = 0.0, ed = 0.0, pd = 0.0;
    for (int i = 0; i < count; ++i) {
      nd = std::max(nd, std::fabs(r.gp_norm[i] - 1.0));
      ed = std::max(ed, std::fabs(r.gp_energy[i] - r.gp_energy[0]));  // absolute, in ħω
      pd = std::max(pd, r.gp_parity[i]);
    }
    r.checks.push_back(upper("gp_norm", nd, 1e-8));
    r.checks.push_back(upper("gp_energy_drift", ed, 1e-5));
    r.checks.push_back(upper("gp_density_parity", pd, 1e-7));
  }
  r.revival.empirical = empirical_revival(r.times, r.branch);
  r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

void write_artifacts(const RunResult& r, const std::string& dir) {
  namespace fs = std::filesystem;
  const fs::path out(dir);
  fs::create_directories(out);
  const RunConfig& c = r.config;
  const int count = static_cast<int>(r.times.size());

  if (c.wants(Output::kEigenvalues)) {
    std::string s = "t";
    for (int j = 0; j < c.n_lambdas; ++j) s += ",lambda_" + std::to_string(j + 1);
    s += ",lambda_branch,branch_rank\n";
    for (int i = 0; i < count; ++i) {
      s += format_number(r.times[i]);
      for (double l : r.lambdas[i]) s += "," + format_number(l);
      s += "," + format_number(r.branch[i]) + "," + std::to_string(r.branch_rank[i] + 1) + "\n";
    }
    write_text(out / "eigenvalues.csv", s);
  }
  if (c.wants(Output::kMeasures)) {
    std::string s = "t,K,S\n";
    for (int i = 0; i < count; ++i)
      s += format_number(r.times[i]) + "," + format_number(r.series.K[i]) + "," + format_number(r.series.S[i]) + "\n";
    write_text(out / "measures.csv", s);
  }
  if (c.wants(Output::kDensities)) {
    for (const DensitySnapshot& d : r.densities) {
      char name[64];
      std::snprintf(name, sizeof name, "density_t%07.3f.csv", d.time);
      std::string s = "k,n_exact,n_gp,n_orbital1\n";
      for (int p = 0; p < r.k_grid.n; ++p) {
        s += format_number(r.k_grid.at(p)) + "," + format_number(d.exact[p]) + "," + format_number(d.gp[p]) + "," +
             format_number(d.orbital1[p]) + "\n";
      }
      write_text(out / name, s);
    }
  }
  if (c.wants(Output::kSpectrum)) {
    std::string s = "E,weight,n,m\n";
    for (const SpectralLine& l : r.spectrum)
      s += format_number(l.energy) + "," + format_number(l.weight) + "," + std::to_string(l.n) + "," + std::to_string(l.m) + "\n";
    write_text(out / "spectrum.csv", s);
  }
  if (c.wants(Output::kComparison) && r.has_gp) {
    std::string s = "t,l1_exact_gp,linf_exact_gp,l1_gp_orbital1,linf_gp_orbital1,l1_exact_orbital1,linf_exact_orbital1\n";
    for (const DensityComparison& d : r.comparison) {
      s += format_number(d.time) + "," + format_number(d.l1_exact_gp) + "," + format_number(d.linf_exact_gp) + "," +
           format_number(d.l1_gp_orbital) + "," + format_number(d.linf_gp_orbital) + "," +
           format_number(d.l1_exact_orbital) + "," + format_number(d.linf_exact_orbital) + "\n";
    }
    write_text(out / "comparison.csv", s);
  }
  if (c.wants(Output::kRevival)) {
    nlohmann::ordered_json j;
    j["found"] = r.revival.found;
    if (r.revival.found) {
      j["delta"] = r.revival.delta;
      j["T_R_periods"] = r.revival.T_R;
      j["pair"] = {line_json(r.revival.first), line_json(r.revival.second)};
    } else {
      j["delta"] = nullptr;
      j["T_R_periods"] = nullptr;
    }
    j["empirical_periods"] = r.revival.empirical ? nlohmann::ordered_json(*r.revival.empirical) : nlohmann::ordered_json(nullptr);
    j["empirical_source"] = "occupation of the tracked initial orbital";
    j["horizon_periods"] = c.periods;
    write_text(out / "revival.json", j.dump(2) + "\n");
  }

  nlohmann::ordered_json sum;
  sum["status"] = r.passed() ? "passed" : "failed";
  sum["config"] = to_json(c);
  sum["completeness"] = r.completeness;
  sum["samples"] = count;
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const InvariantCheck& ch : r.checks)
    checks.push_back({{"name", ch.name}, {"passed", ch.passed}, {"value", ch.value}, {"limit", ch.limit}});
  sum["invariants"] = checks;
  nlohmann::ordered_json obs;
  obs["min_lambda_1"] = count ? std::min_element(r.lambdas.begin(), r.lambdas.end(), [](auto& a, auto& b) { return a[0] < b[0]; })->at(0) : 0.0;
  obs["min_branch_occupation"] = count ? *std::min_element(r.branch.begin(), r.branch.end()) : 0.0;
  obs["min_branch_overlap"] = count ? *std::min_element(r.branch_overlap.begin(), r.branch_overlap.end()) : 0.0;
  obs["max_exact_density_asymmetry"] = count ? *std::max_element(r.exact_parity.begin(), r.exact_parity.end()) : 0.0;
  if (r.has_gp && !r.comparison.empty()) {
    double l1 = 0.0, linf = 0.0;
    for (const DensityComparison& d : r.comparison) {
      l1 = std::max(l1, d.l1_exact_gp);
      linf = std::max(linf, d.linf_exact_gp);
    }
    obs["max_l1_exact_gp"] = l1;
    obs["max_linf_exact_gp"] = linf;
  }
  if (count > 1) obs["pearson_K_S"] = pearson(r.series.K, r.series.S);
  sum["observations"] = obs;
  sum["wall_seconds"] = r.wall_seconds;
  write_text(out / "summary.json", sum.dump(2) + "\n");
}

void write_abort_summary(const RunConfig& c, const std::string& reason, const std::string& dir) {
  std::filesystem::create_directories(dir);
  nlohmann::ordered_json sum;
  sum["status"] = "aborted";
  sum["reason"] = reason;
  sum["config"] = to_json(c);
  write_text(std::filesystem::path(dir) / "summary.json", sum.dump(2) + "\n");
}

}  // namespace twobody
