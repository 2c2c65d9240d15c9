#pragma once

// Benchmark protocol: reference trajectories on prescribed grids, one
// independent scheme step per consecutive grid pair starting from the
// reference value, and CSV/JSON emission of the per-component errors.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "stiffbench/problems.hpp"
#include "stiffbench/registry.hpp"

namespace stiffbench {

struct Grid {
  std::string model;
  GridRule rule = GridRule::Linear;
  std::vector<double> points;  // strictly increasing, endpoints = t_span
  int n() const { return static_cast<int>(points.size()); }
};

/// Uniform (Linear) or geometric (Logarithmic) grid with exactly n points
/// across the problem's time span.
Grid build_grid(const OdeProblem& p, int n);

/// High-accuracy states on a grid, produced by marching fixed-substep
/// Radau IIA (order 5) between consecutive grid points. `verification_delta`
/// is the max componentwise discrepancy against a run with doubled substeps.
struct ReferenceTrajectory {
  Grid grid;
  std::vector<Vec> states;
  int substeps_used = 0;
  double verification_delta = 0.0;
};

/// Builds and verifies a reference. If the delta check
/// (delta <= 1e-10 * (1 + max state norm)) fails, retries once with four
/// times the substeps, then throws ReferenceNotConverged.
ReferenceTrajectory build_reference(const OdeProblem& p, const Grid& g, int substeps);

/// One scheme prediction over one grid pair.
struct BenchmarkRecord {
  std::string model;
  std::string scheme;
  int n = 0;
  double t0 = 0.0;
  double t1 = 0.0;
  double h = 0.0;
  Vec abs_error;          // per component; all +inf when diverged
  double max_error = 0.0; // inf-norm summary; +inf when diverged
  bool diverged = false;
  StepStats stats;
};

struct PairwiseOptions {
  SchemeOptions scheme;
  int jobs = 1;  // <= 0 resolves to hardware concurrency
};

/// Applies the scheme once per consecutive pair, always starting from the
/// reference state at t0. Scheme failures (overflow, Newton breakdown,
/// singular resolvents) and non-finite outputs become diverged records; the
/// run never aborts. Record order and contents are independent of `jobs`.
std::vector<BenchmarkRecord> run_pairwise(const OdeProblem& p,
                                          const ReferenceTrajectory& ref,
                                          const SchemeDescriptor& scheme,
                                          const PairwiseOptions& opts = {});

/// Global convergence order: integrates the problem over its full span with
/// uniform steps near each h in h_list, records the max deviation from the
/// closed-form solution, and fits log(err) against log(h) by least squares.
/// Requires p.exact. Throws DegenerateFit when errors reach the
/// floating-point floor (< 1e-14).
double convergence_study(const OdeProblem& p, const SchemeDescriptor& scheme,
                         const std::vector<double>& h_list,
                         const SchemeOptions& opts = {});

/// CSV layout: model,scheme,n,t0,t1,h,component_index,abs_error,diverged —
/// one row per (pair, component), numbers with 17 significant digits.
void emit_csv(const std::vector<BenchmarkRecord>& records, std::ostream& out);

struct RunMetadata {
  std::string model;
  std::vector<std::string> schemes;
  int n = 0;
  int substeps_used = 0;
  double verification_delta = 0.0;
  NewtonConfig newton;
  EtdRdpSignMode etd_rdp_sign = EtdRdpSignMode::Negated;
  int jobs = 1;
  std::string note;
};

void emit_json(const RunMetadata& meta, std::ostream& out);

/// 17-significant-digit text form that round-trips exactly through strtod.
std::string format_double(double x);

// ---- reference cache -------------------------------------------------------
// References are expensive; they are cached as versioned text files keyed by
// (model, n, requested substeps, artifact version).

std::string reference_cache_filename(const std::string& model, int n, int substeps);

std::optional<ReferenceTrajectory> load_reference_cache(const std::string& path,
                                                        const OdeProblem& p, int n,
                                                        int substeps);

void save_reference_cache(const std::string& path, const ReferenceTrajectory& ref,
                          int requested_substeps);

/// Cache-aware wrapper around build_reference; cache_dir may be empty to
/// disable caching.
ReferenceTrajectory get_reference(const OdeProblem& p, int n, int substeps,
                                  const std::string& cache_dir);

}  // namespace stiffbench
