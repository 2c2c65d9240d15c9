// Benchmark CLI for single-step stiff-ODE integration schemes.
//
//   stiffbench list
//   stiffbench reference --model robertson --n 1314
//   stiffbench bench --model robertson --scheme backward_euler --n 1314
//   stiffbench convergence --scheme rk4
//   stiffbench demo-stiffness [--rtol 1e-3 --atol 1e-6]
//
// Flags can also come from a config file (--config run.toml); explicit flags
// override file values. Every run echoes its fully-resolved configuration to
// <out>/run_config.json.

#include <iostream>

#include "CLI11.hpp"

#include "stiffbench/runner.hpp"

int main(int argc, char** argv) {
  CLI::App app{"stiffbench: single-step stiff-ODE scheme benchmark"};
  app.require_subcommand(1);

  stiffbench::RunConfig cfg;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--model", cfg.model, "model name (vanderpol, hires, robertson, smooth)");
    cmd->add_option("--scheme", cfg.schemes, "scheme name(s), or 'all'");
    cmd->add_option("--n", cfg.ns, "grid size(s), number of time points");
    cmd->add_option("--out", cfg.out_dir, "output directory");
    cmd->add_option("--substeps", cfg.substeps, "reference substeps per interval (0 = model default)");
    cmd->add_option("--newton-abs-tol", cfg.newton.abs_tol, "Newton absolute tolerance");
    cmd->add_option("--newton-rel-tol", cfg.newton.rel_tol, "Newton relative tolerance");
    cmd->add_option("--newton-max-iters", cfg.newton.max_iters, "Newton iteration cap");
    cmd->add_option("--sign-mode", cfg.sign_mode,
                    "etd_rdp resolvent sign convention: auto, paper_verbatim, negated");
    cmd->add_option("--rtol", cfg.rtol, "adaptive relative tolerance");
    cmd->add_option("--atol", cfg.atol, "adaptive absolute tolerance");
    cmd->add_option("--jobs", cfg.jobs, "worker threads (0 = auto)");
    cmd->set_config("--config", "", "read options from a config file");
  };

  CLI::App* list = app.add_subcommand("list", "print every registered scheme");
  CLI::App* reference = app.add_subcommand("reference", "build and cache reference trajectories");
  CLI::App* bench = app.add_subcommand("bench", "pairwise single-step benchmark, CSV output");
  CLI::App* convergence = app.add_subcommand("convergence", "order study on the smooth test problem");
  CLI::App* demo = app.add_subcommand("demo-stiffness", "adaptive explicit integration of the stiff oscillator");
  add_common(reference);
  add_common(bench);
  add_common(convergence);
  add_common(demo);

  CLI11_PARSE(app, argc, argv);

  try {
    if (list->parsed()) return stiffbench::cmd_list(std::cout);
    if (reference->parsed()) return stiffbench::cmd_reference(cfg, std::cout);
    if (bench->parsed()) return stiffbench::cmd_bench(cfg, std::cout);
    if (convergence->parsed()) return stiffbench::cmd_convergence(cfg, std::cout);
    if (demo->parsed()) return stiffbench::cmd_demo_stiffness(cfg, std::cout);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
