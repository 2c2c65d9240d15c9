#include "stiffbench/runner.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "json.hpp"

#include "stiffbench/errors.hpp"
#include "stiffbench/schemes_classical.hpp"
#include "stiffbench/version.hpp"

namespace stiffbench {

namespace fs = std::filesystem;

std::vector<const SchemeDescriptor*> resolve_schemes(
    const std::vector<std::string>& names) {
  std::vector<const SchemeDescriptor*> out;
  if (names.empty() || (names.size() == 1 && names[0] == "all")) {
    for (const auto& s : all_schemes()) out.push_back(&s);
    return out;
  }
  for (const auto& name : names) {
    const SchemeDescriptor* s = find_scheme(name);
    if (!s) throw std::invalid_argument("unknown scheme '" + name + "'");
    out.push_back(s);
  }
  return out;
}

SchemeOptions scheme_options_from(const RunConfig& cfg) {
  SchemeOptions opts;
  opts.newton = cfg.newton;
  if (cfg.sign_mode == "paper_verbatim")
    opts.etd_rdp_sign = EtdRdpSignMode::PaperVerbatim;
  else if (cfg.sign_mode == "negated")
    opts.etd_rdp_sign = EtdRdpSignMode::Negated;
  else if (cfg.sign_mode == "auto")
    opts.etd_rdp_sign = etd_rdp_default_sign_mode();
  else
    throw std::invalid_argument("unknown sign mode '" + cfg.sign_mode +
                                "' (use auto, paper_verbatim or negated)");
  return opts;
}

namespace {

void echo_config(const RunConfig& cfg, const std::string& command) {
  fs::create_directories(cfg.out_dir);
  nlohmann::json j;
  j["artifact_version"] = kArtifactVersion;
  j["command"] = command;
  j["model"] = cfg.model;
  j["schemes"] = cfg.schemes.empty() ? std::vector<std::string>{"all"} : cfg.schemes;
  j["n"] = cfg.ns;
  j["out"] = cfg.out_dir;
  j["substeps"] = cfg.substeps;
  j["newton"] = {{"abs_tol", cfg.newton.abs_tol},
                 {"rel_tol", cfg.newton.rel_tol},
                 {"max_iters", cfg.newton.max_iters}};
  j["sign_mode"] = cfg.sign_mode;
  j["sign_mode_resolved"] = to_string(scheme_options_from(cfg).etd_rdp_sign);
  j["rtol"] = cfg.rtol;
  j["atol"] = cfg.atol;
  j["jobs"] = cfg.jobs;
  std::ofstream out(fs::path(cfg.out_dir) / "run_config.json", std::ios::binary);
  out << j.dump(2) << '\n';
}

int effective_substeps(const RunConfig& cfg, const OdeProblem& p) {
  return cfg.substeps > 0 ? cfg.substeps : p.reference_substeps;
}

}  // namespace

int cmd_list(std::ostream& out) {
  for (const auto& s : all_schemes())
    out << s.name << "  family=" << to_string(s.family) << "  order " << s.order
        << "\n";
  return 0;
}

int cmd_reference(const RunConfig& cfg, std::ostream& log) {
  OdeProblem p;
  try {
    p = problem_by_name(cfg.model);
  } catch (const std::invalid_argument& e) {
    log << e.what() << "\nvalid models:";
    for (const auto& m : problem_names()) log << ' ' << m;
    log << "\n";
    return 2;
  }
  if (cfg.ns.empty()) {
    log << "reference: no grid sizes given (use --n)\n";
    return 2;
  }
  try {
    echo_config(cfg, "reference");
    const std::string cache = (fs::path(cfg.out_dir) / "cache").string();
    for (int n : cfg.ns) {
      ReferenceTrajectory ref = get_reference(p, n, effective_substeps(cfg, p), cache);
      log << "reference " << cfg.model << " n=" << n
          << " substeps_used=" << ref.substeps_used
          << " verification_delta=" << format_double(ref.verification_delta) << "\n";
    }
  } catch (const std::exception& e) {
    log << "reference failed: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

std::string bench_csv(const OdeProblem& p, const ReferenceTrajectory& ref,
                      const SchemeDescriptor& scheme, const PairwiseOptions& opts) {
  const std::vector<BenchmarkRecord> records = run_pairwise(p, ref, scheme, opts);
  std::ostringstream out;
  emit_csv(records, out);
  return out.str();
}

int cmd_bench(const RunConfig& cfg, std::ostream& log) {
  OdeProblem p;
  std::vector<const SchemeDescriptor*> schemes;
  try {
    p = problem_by_name(cfg.model);
    schemes = resolve_schemes(cfg.schemes);
  } catch (const std::invalid_argument& e) {
    log << e.what() << "\nvalid models:";
    for (const auto& m : problem_names()) log << ' ' << m;
    log << "\nvalid schemes: all";
    for (const auto& s : scheme_names()) log << ' ' << s;
    log << "\n";
    return 2;
  }
  if (cfg.ns.empty()) {
    log << "bench: no grid sizes given (use --n)\n";
    return 2;
  }

  try {
    echo_config(cfg, "bench");
    const std::string cache = (fs::path(cfg.out_dir) / "cache").string();
    PairwiseOptions opts;
    opts.scheme = scheme_options_from(cfg);
    opts.jobs = cfg.jobs;

    for (int n : cfg.ns) {
      ReferenceTrajectory ref = get_reference(p, n, effective_substeps(cfg, p), cache);
      RunMetadata meta;
      meta.model = cfg.model;
      meta.n = n;
      meta.substeps_used = ref.substeps_used;
      meta.verification_delta = ref.verification_delta;
      meta.newton = cfg.newton;
      meta.etd_rdp_sign = opts.scheme.etd_rdp_sign;
      meta.jobs = cfg.jobs;

      for (const SchemeDescriptor* s : schemes) {
        const std::string csv = bench_csv(p, ref, *s, opts);
        std::ostringstream name;
        name << cfg.model << '_' << s->name << "_n" << n << ".csv";
        std::ofstream out(fs::path(cfg.out_dir) / name.str(), std::ios::binary);
        out << csv;
        if (!out) throw std::runtime_error("failed writing " + name.str());
        meta.schemes.push_back(s->name);
        log << "bench " << cfg.model << " n=" << n << " scheme=" << s->name << " -> "
            << name.str() << "\n";
      }

      std::ostringstream mname;
      mname << "metadata_" << cfg.model << "_n" << n << ".json";
      std::ofstream mout(fs::path(cfg.out_dir) / mname.str(), std::ios::binary);
      emit_json(meta, mout);
    }
  } catch (const std::exception& e) {
    log << "bench failed: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

int cmd_convergence(const RunConfig& cfg, std::ostream& log) {
  std::vector<const SchemeDescriptor*> schemes;
  try {
    schemes = resolve_schemes(cfg.schemes);
  } catch (const std::invalid_argument& e) {
    log << e.what() << "\nvalid schemes: all";
    for (const auto& s : scheme_names()) log << ' ' << s;
    log << "\n";
    return 2;
  }

  const OdeProblem p = smooth_test();
  const SchemeOptions opts = scheme_options_from(cfg);
  for (const SchemeDescriptor* s : schemes) {
    std::vector<double> hs;
    // Higher-order schemes hit the error floor sooner; start them larger.
    const double h0 = s->order >= 4 ? 0.5 : 0.2;
    for (int k = 0; k < 8; ++k) hs.push_back(h0 / std::pow(2.0, k));
    try {
      const double slope = convergence_study(p, *s, hs, opts);
      log << s->name << " slope " << std::fixed << std::setprecision(3) << slope
          << std::defaultfloat << " (declared order " << s->order << ")\n";
    } catch (const DegenerateFit& e) {
      log << s->name << " degenerate fit: " << e.what() << "\n";
    } catch (const NumericsError& e) {
      log << s->name << " failed: " << e.what() << "\n";
    }
  }
  return 0;
}

int cmd_demo_stiffness(const RunConfig& cfg, std::ostream& log) {
  try {
    const OdeProblem p = vanderpol();
    const AdaptiveTrajectory traj = rkf45_integrate(p, cfg.rtol, cfg.atol);
    log << "adaptive rkf45 on " << p.name << " (rtol=" << cfg.rtol
        << ", atol=" << cfg.atol << ")\n";
    log << "  accepted_steps        " << traj.stats.accepted_steps << "\n";
    log << "  rejected_steps        " << traj.stats.rejected_steps << "\n";
    log << "  function_evaluations  " << traj.stats.function_evaluations << "\n";
    log << "  final_time            " << traj.stats.final_time << "\n";
    log << "every rhs call is counted, including rejected attempts\n";
  } catch (const std::exception& e) {
    log << "demo-stiffness failed: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace stiffbench
