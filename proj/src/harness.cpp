#include "stiffbench/harness.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "stiffbench/errors.hpp"
#include "stiffbench/version.hpp"

namespace stiffbench {

namespace {

int resolve_jobs(int jobs) {
  if (jobs > 0) return jobs;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Static partition into contiguous chunks; record slots are preassigned, so
// results do not depend on the worker count.
template <typename Fn>
void parallel_for(int count, int jobs, const Fn& fn) {
  jobs = std::min(resolve_jobs(jobs), std::max(count, 1));
  if (jobs <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> workers;
  std::exception_ptr first_error;
  std::mutex error_mu;
  for (int w = 0; w < jobs; ++w) {
    const int lo = static_cast<int>(static_cast<long long>(count) * w / jobs);
    const int hi = static_cast<int>(static_cast<long long>(count) * (w + 1) / jobs);
    workers.emplace_back([&, lo, hi] {
      try {
        for (int i = lo; i < hi; ++i) fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& t : workers) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace

Grid build_grid(const OdeProblem& p, int n) {
  if (n < 2) throw std::invalid_argument("build_grid: need at least 2 points");
  Grid g;
  g.model = p.name;
  g.rule = p.grid_rule;
  g.points.resize(static_cast<size_t>(n));
  if (p.grid_rule == GridRule::Linear) {
    for (int i = 0; i < n; ++i)
      g.points[static_cast<size_t>(i)] =
          p.t_start + (p.t_end - p.t_start) * static_cast<double>(i) / (n - 1);
  } else {
    const double la = std::log(p.t_start);
    const double lb = std::log(p.t_end);
    for (int i = 0; i < n; ++i)
      g.points[static_cast<size_t>(i)] =
          std::exp(la + (lb - la) * static_cast<double>(i) / (n - 1));
  }
  g.points.front() = p.t_start;
  g.points.back() = p.t_end;
  return g;
}

namespace {

// Marches the grid once with m Radau5 substeps per interval, each interval
// continuing from the previous reference state.
std::vector<Vec> march_reference(const OdeProblem& p, const Grid& g, int m) {
  std::vector<Vec> states;
  states.reserve(g.points.size());
  states.push_back(p.y0);
  Vec y = p.y0;
  NewtonConfig cfg;  // defaults
  for (size_t i = 0; i + 1 < g.points.size(); ++i) {
    const double t0 = g.points[i];
    const double t1 = g.points[i + 1];
    const double hs = (t1 - t0) / m;
    for (int k = 0; k < m; ++k) {
      try {
        y = radau_step(p, t0 + k * hs, y, hs, radau5_tableau(), cfg);
      } catch (const NumericsError& e) {
        std::ostringstream msg;
        msg << "reference oracle failed at t=" << t0 + k * hs << ": " << e.what();
        throw ReferenceNotConverged(msg.str());
      }
    }
    states.push_back(y);
  }
  return states;
}

double max_state_norm(const std::vector<Vec>& states) {
  double m = 0.0;
  for (const auto& s : states) m = std::max(m, inf_norm(s));
  return m;
}

double max_discrepancy(const std::vector<Vec>& a, const std::vector<Vec>& b) {
  double d = 0.0;
  for (size_t i = 0; i < a.size(); ++i)
    for (int k = 0; k < a[i].size(); ++k)
      d = std::max(d, std::abs(a[i][k] - b[i][k]));
  return d;
}

}  // namespace

ReferenceTrajectory build_reference(const OdeProblem& p, const Grid& g, int substeps) {
  if (substeps < 2) throw std::invalid_argument("build_reference: substeps must be >= 2");

  int m = substeps;
  for (int attempt = 0; attempt < 2; ++attempt) {
    std::vector<Vec> coarse = march_reference(p, g, m);
    std::vector<Vec> fine = march_reference(p, g, 2 * m);
    const double delta = max_discrepancy(coarse, fine);
    const double tol = 1e-10 * (1.0 + max_state_norm(fine));
    if (delta <= tol) {
      ReferenceTrajectory ref;
      ref.grid = g;
      ref.states = std::move(fine);  // keep the finer of the two runs
      ref.substeps_used = 2 * m;
      ref.verification_delta = delta;
      return ref;
    }
    m *= 4;
  }
  std::ostringstream msg;
  msg << "reference for " << p.name << " (n=" << g.n()
      << ") failed verification up to substeps=" << m;
  throw ReferenceNotConverged(msg.str());
}

std::vector<BenchmarkRecord> run_pairwise(const OdeProblem& p,
                                          const ReferenceTrajectory& ref,
                                          const SchemeDescriptor& scheme,
                                          const PairwiseOptions& opts) {
  const int pairs = ref.grid.n() - 1;
  std::vector<BenchmarkRecord> records(static_cast<size_t>(pairs));

  parallel_for(pairs, opts.jobs, [&](int i) {
    BenchmarkRecord& rec = records[static_cast<size_t>(i)];
    rec.model = p.name;
    rec.scheme = scheme.name;
    rec.n = ref.grid.n();
    rec.t0 = ref.grid.points[static_cast<size_t>(i)];
    rec.t1 = ref.grid.points[static_cast<size_t>(i) + 1];
    rec.h = rec.t1 - rec.t0;

    const Vec& start = ref.states[static_cast<size_t>(i)];
    const Vec& target = ref.states[static_cast<size_t>(i) + 1];

    bool ok = true;
    Vec pred;
    try {
      pred = scheme.step(p, rec.t0, start, rec.h, opts.scheme, &rec.stats);
      ok = all_finite(pred) && pred.size() == p.dim;
    } catch (const NumericsError&) {
      ok = false;
    }

    if (ok) {
      rec.abs_error = Vec(p.dim);
      double m = 0.0;
      for (int k = 0; k < p.dim; ++k) {
        rec.abs_error[k] = std::abs(pred[k] - target[k]);
        m = std::max(m, rec.abs_error[k]);
      }
      rec.max_error = m;
    } else {
      rec.diverged = true;
      rec.abs_error = Vec(p.dim, std::numeric_limits<double>::infinity());
      rec.max_error = std::numeric_limits<double>::infinity();
    }
  });
  return records;
}

double convergence_study(const OdeProblem& p, const SchemeDescriptor& scheme,
                         const std::vector<double>& h_list,
                         const SchemeOptions& opts) {
  if (!p.exact)
    throw std::invalid_argument("convergence_study: problem has no closed-form solution");
  if (h_list.size() < 4)
    throw std::invalid_argument("convergence_study: need at least 4 step sizes");

  const double span = p.t_end - p.t_start;
  std::vector<double> log_h, log_e;
  for (double h_req : h_list) {
    const int steps = std::max(1, static_cast<int>(std::llround(span / h_req)));
    const double h = span / steps;  // snap so the span is covered exactly
    Vec y = p.y0;
    double worst = 0.0;
    for (int i = 0; i < steps; ++i) {
      const double t = p.t_start + i * h;
      y = scheme.step(p, t, y, h, opts, nullptr);
      worst = std::max(worst, inf_norm(y - p.exact(t + h)));
    }
    if (worst < 1e-14)
      throw DegenerateFit("convergence_study: errors at floating-point floor");
    log_h.push_back(std::log(h));
    log_e.push_back(std::log(worst));
  }

  // Least-squares slope of log(err) vs log(h).
  const double n = static_cast<double>(log_h.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t i = 0; i < log_h.size(); ++i) {
    sx += log_h[i];
    sy += log_e[i];
    sxx += log_h[i] * log_h[i];
    sxy += log_h[i] * log_e[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

std::string format_double(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x,
                                 std::chars_format::general, 17);
  (void)ec;
  return std::string(buf, end);
}

void emit_csv(const std::vector<BenchmarkRecord>& records, std::ostream& out) {
  out << "model,scheme,n,t0,t1,h,component_index,abs_error,diverged\n";
  for (const auto& r : records) {
    for (int k = 0; k < r.abs_error.size(); ++k) {
      out << r.model << ',' << r.scheme << ',' << r.n << ',' << format_double(r.t0)
          << ',' << format_double(r.t1) << ',' << format_double(r.h) << ',' << k << ','
          << format_double(r.abs_error[k]) << ',' << (r.diverged ? 1 : 0) << '\n';
    }
  }
}

void emit_json(const RunMetadata& meta, std::ostream& out) {
  nlohmann::json j;
  j["artifact_version"] = kArtifactVersion;
  j["model"] = meta.model;
  j["schemes"] = meta.schemes;
  j["n"] = meta.n;
  j["reference_substeps_used"] = meta.substeps_used;
  j["verification_delta"] = meta.verification_delta;
  j["newton"] = {{"abs_tol", meta.newton.abs_tol},
                 {"rel_tol", meta.newton.rel_tol},
                 {"max_iters", meta.newton.max_iters}};
  j["etd_rdp_sign_mode"] = to_string(meta.etd_rdp_sign);
  j["jobs"] = meta.jobs;
  j["grid_note"] =
      "uniform (linear or geometric) grids; point placement is not taken from "
      "an adaptive solver";
  if (!meta.note.empty()) j["note"] = meta.note;
  out << j.dump(2) << '\n';
}

std::string reference_cache_filename(const std::string& model, int n, int substeps) {
  std::ostringstream name;
  name << model << "_n" << n << "_m" << substeps << "_v" << kArtifactVersion << ".ref";
  return name.str();
}

void save_reference_cache(const std::string& path, const ReferenceTrajectory& ref,
                          int requested_substeps) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write reference cache: " + path);
  out << "stiffbench-ref-cache 1\n";
  out << "artifact_version " << kArtifactVersion << "\n";
  out << "model " << ref.grid.model << "\n";
  out << "n " << ref.grid.n() << "\n";
  out << "substeps_requested " << requested_substeps << "\n";
  out << "substeps_used " << ref.substeps_used << "\n";
  out << "verification_delta " << format_double(ref.verification_delta) << "\n";
  out << "rule " << (ref.grid.rule == GridRule::Linear ? "linear" : "log") << "\n";
  for (size_t i = 0; i < ref.states.size(); ++i) {
    out << format_double(ref.grid.points[i]);
    for (int k = 0; k < ref.states[i].size(); ++k)
      out << ' ' << format_double(ref.states[i][k]);
    out << '\n';
  }
  if (!out) throw std::runtime_error("error while writing reference cache: " + path);
}

std::optional<ReferenceTrajectory> load_reference_cache(const std::string& path,
                                                        const OdeProblem& p, int n,
                                                        int substeps) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;

  std::string tag, value;
  int format = 0;
  in >> tag >> format;
  if (tag != "stiffbench-ref-cache" || format != 1) return std::nullopt;
  in >> tag >> value;
  if (tag != "artifact_version" || value != kArtifactVersion) return std::nullopt;
  in >> tag >> value;
  if (tag != "model" || value != p.name) return std::nullopt;
  int file_n = 0;
  in >> tag >> file_n;
  if (tag != "n" || file_n != n) return std::nullopt;
  int requested = 0;
  in >> tag >> requested;
  if (tag != "substeps_requested" || requested != substeps) return std::nullopt;

  ReferenceTrajectory ref;
  in >> tag >> ref.substeps_used;
  if (tag != "substeps_used") return std::nullopt;
  in >> tag >> ref.verification_delta;
  if (tag != "verification_delta") return std::nullopt;
  in >> tag >> value;
  if (tag != "rule") return std::nullopt;

  ref.grid.model = p.name;
  ref.grid.rule = value == "log" ? GridRule::Logarithmic : GridRule::Linear;
  ref.grid.points.resize(static_cast<size_t>(n));
  ref.states.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    in >> ref.grid.points[static_cast<size_t>(i)];
    Vec y(p.dim);
    for (int k = 0; k < p.dim; ++k) in >> y[k];
    ref.states[static_cast<size_t>(i)] = std::move(y);
  }
  if (!in) return std::nullopt;
  return ref;
}

ReferenceTrajectory get_reference(const OdeProblem& p, int n, int substeps,
                                  const std::string& cache_dir) {
  std::string path;
  if (!cache_dir.empty()) {
    std::filesystem::create_directories(cache_dir);
    path = (std::filesystem::path(cache_dir) /
            reference_cache_filename(p.name, n, substeps))
               .string();
    if (auto cached = load_reference_cache(path, p, n, substeps)) return *cached;
  }
  ReferenceTrajectory ref = build_reference(p, build_grid(p, n), substeps);
  if (!path.empty()) save_reference_cache(path, ref, substeps);
  return ref;
}

}  // namespace stiffbench
