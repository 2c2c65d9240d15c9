#pragma once

// Command implementations behind the CLI. They live in the library so tests
// can drive the exact same code paths (in particular the determinism checks
// on benchmark output).

#include <iosfwd>
#include <string>
#include <vector>

#include "stiffbench/harness.hpp"

namespace stiffbench {

struct RunConfig {
  std::string model = "robertson";
  std::vector<std::string> schemes;  // empty or {"all"} selects every scheme
  std::vector<int> ns;
  std::string out_dir = "out";
  int substeps = 0;  // 0 -> model default
  NewtonConfig newton;
  std::string sign_mode = "auto";  // auto | paper_verbatim | negated
  double rtol = 1e-3;
  double atol = 1e-6;
  int jobs = 0;
};

// Exit codes: 0 success, 1 runtime failure (I/O, reference not converged),
// 2 unknown scheme/model name.
int cmd_list(std::ostream& out);
int cmd_reference(const RunConfig& cfg, std::ostream& log);
int cmd_bench(const RunConfig& cfg, std::ostream& log);
int cmd_convergence(const RunConfig& cfg, std::ostream& log);
int cmd_demo_stiffness(const RunConfig& cfg, std::ostream& log);

/// Resolves "all"/empty to every registered scheme; throws
/// std::invalid_argument naming the offender for unknown entries.
std::vector<const SchemeDescriptor*> resolve_schemes(const std::vector<std::string>& names);

SchemeOptions scheme_options_from(const RunConfig& cfg);

/// CSV bytes for one (model, scheme, n) benchmark, as written by cmd_bench.
std::string bench_csv(const OdeProblem& p, const ReferenceTrajectory& ref,
                      const SchemeDescriptor& scheme, const PairwiseOptions& opts);

}  // namespace stiffbench
