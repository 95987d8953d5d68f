#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "twobody/error.hpp"
#include "twobody/runner.hpp"
#include "twobody/selftest.hpp"

// exit codes: 0 ok, 1 invariant breach, 2 bad config, 3 truncation abort, 4 other error
int main(int argc, char** argv) {
  CLI::App app{"Exact two-boson dynamics in a harmonic trap, with a mean-field comparison"};
  app.require_subcommand(1);

  std::string config_path, preset_name, out_dir;
  bool quiet = false;
  auto* run = app.add_subcommand("run", "Run one configuration and write its artifacts");
  auto* cfg_opt = run->add_option("--config", config_path, "key = value configuration file")->check(CLI::ExistingFile);
  auto* preset_opt = run->add_option("--preset", preset_name, "named preset: fig1 fig2 fig3 fig4 fig5 fig7");
  cfg_opt->excludes(preset_opt);
  run->add_option("--out", out_dir, "output directory")->required();
  run->add_flag("--quiet", quiet, "no progress output");

  bool inject = false;
  auto* st = app.add_subcommand("selftest", "Run the built-in invariant suite");
  st->add_flag("--inject-fault", inject, "corrupt one normalization constant to show the orthonormality check firing");

  std::string show_name;
  auto* show = app.add_subcommand("preset", "Print a preset as a config file");
  show->add_option("name", show_name, "preset name")->required();

  CLI11_PARSE(app, argc, argv);

  if (show->parsed()) {
    try {
      std::cout << twobody::to_config_text(twobody::preset(show_name));
    } catch (const twobody::ConfigError& e) {
      std::cerr << "config error: " << e.what() << "\n";
      return 2;
    }
    return 0;
  }

  if (st->parsed()) {
    twobody::SelftestOptions opt;
    opt.corrupt_normalization = inject;
    const twobody::SelftestReport r = twobody::selftest(opt, &std::cout);
    std::cout << (r.passed() ? "selftest passed" : "selftest FAILED") << "\n";
    return r.passed() ? 0 : 1;
  }

  if (cfg_opt->count() + preset_opt->count() != 1) {
    std::cerr << "run: give exactly one of --config or --preset\n";
    return 2;
  }
  twobody::RunConfig cfg;
  try {
    cfg = preset_opt->count() ? twobody::preset(preset_name) : twobody::load_config(config_path);
  } catch (const twobody::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  }
  try {
    const twobody::RunResult r = twobody::simulate(cfg, quiet ? nullptr : &std::cerr);
    twobody::write_artifacts(r, out_dir);
    for (const auto& c : r.checks) {
      if (!c.passed) std::cerr << "invariant breach: " << c.name << " = " << c.value << " (limit " << c.limit << ")\n";
    }
    if (!quiet) std::cerr << "wrote " << out_dir << " in " << r.wall_seconds << " s\n";
    return r.passed() ? 0 : 1;
  } catch (const twobody::TruncationError& e) {
    twobody::write_abort_summary(cfg, e.what(), out_dir);
    std::cerr << "aborted: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    twobody::write_abort_summary(cfg, e.what(), out_dir);
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
}
