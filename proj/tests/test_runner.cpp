#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "twobody/error.hpp"
#include "twobody/runner.hpp"

using namespace twobody;
namespace fs = std::filesystem;

namespace {

RunConfig small() {
  RunConfig c;
  c.g = -0.2;
  c.L = 1.0;
  c.periods = 1.0;
  c.samples_per_period = 8;
  c.density_interval = 0.5;
  c.schmidt_checks = 1;
  return c;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("twobody_test_" + name);
  fs::remove_all(p);
  return p;
}

}  // namespace

TEST_CASE("number formatting") {
  CHECK(format_number(0.1) == "0.1");
  CHECK(format_number(-0.0) == "0");
  CHECK(format_number(1.0 / 3.0) == "0.333333333333");
  CHECK(format_number(-2.5e-17) == "-2.5e-17");
}

TEST_CASE("a short run passes its invariants and writes every artifact") {
  const RunResult r = simulate(small());
  for (const InvariantCheck& c : r.checks) {
    INFO(c.name << " = " << c.value);
    CHECK(c.passed);
  }
  CHECK(r.times.size() == 9);
  CHECK(r.has_gp);
  CHECK(r.comparison.size() == 9);
  CHECK(r.densities.size() == 3);
  CHECK(r.schmidt_deviation.size() == 1);
  CHECK(r.series.K.front() == doctest::Approx(1.0).epsilon(1e-9));

  const fs::path dir = scratch("run");
  write_artifacts(r, dir.string());
  for (const char* f : {"eigenvalues.csv", "measures.csv", "spectrum.csv", "comparison.csv", "revival.json",
                        "summary.json", "density_t000.000.csv", "density_t000.500.csv", "density_t001.000.csv"}) {
    INFO(f);
    CHECK(fs::exists(dir / f));
  }
  const std::string eig = slurp(dir / "eigenvalues.csv");
  CHECK(eig.rfind("t,lambda_1,lambda_2,lambda_3,lambda_4,lambda_5,lambda_6,lambda_branch,branch_rank\n", 0) == 0);
  CHECK(std::count(eig.begin(), eig.end(), '\n') == 10);
  const std::string dens = slurp(dir / "density_t000.500.csv");
  CHECK(dens.rfind("k,n_exact,n_gp,n_orbital1\n", 0) == 0);
  CHECK(std::count(dens.begin(), dens.end(), '\n') == 257);
  const nlohmann::json sum = nlohmann::json::parse(slurp(dir / "summary.json"));
  CHECK(sum["status"] == "passed");
  CHECK(sum["config"]["L"] == 1.0);
  fs::remove_all(dir);
}

TEST_CASE("identical configurations give byte-identical CSV files") {
  const fs::path a = scratch("det_a"), b = scratch("det_b");
  RunConfig c = small();
  c.outputs = {Output::kEigenvalues, Output::kMeasures, Output::kSpectrum, Output::kDensities};
  write_artifacts(simulate(c), a.string());
  write_artifacts(simulate(c), b.string());
  int compared = 0;
  for (const auto& e : fs::directory_iterator(a)) {
    if (e.path().extension() != ".csv") continue;
    INFO(e.path().filename());
    CHECK(slurp(e.path()) == slurp(b / e.path().filename()));
    ++compared;
  }
  CHECK(compared >= 6);
  fs::remove_all(a);
  fs::remove_all(b);
}

TEST_CASE("output selection skips the mean-field run") {
  RunConfig c = small();
  c.outputs = {Output::kSpectrum, Output::kRevival};
  const RunResult r = simulate(c);
  CHECK_FALSE(r.has_gp);
  const fs::path dir = scratch("subset");
  write_artifacts(r, dir.string());
  CHECK(fs::exists(dir / "spectrum.csv"));
  CHECK_FALSE(fs::exists(dir / "comparison.csv"));
  CHECK_FALSE(fs::exists(dir / "eigenvalues.csv"));
  fs::remove_all(dir);
}

TEST_CASE("a truncated basis aborts with a summary") {
  RunConfig c = small();
  c.L = 3.0;
  c.basis.n_cm = 4;
  CHECK_THROWS_AS(simulate(c), TruncationError);
  const fs::path dir = scratch("abort");
  write_abort_summary(c, "too small", dir.string());
  const nlohmann::json sum = nlohmann::json::parse(slurp(dir / "summary.json"));
  CHECK(sum["status"] == "aborted");
  CHECK(sum["config"]["n_cm"] == 4);
  fs::remove_all(dir);
}
