#pragma once

// Name-indexed registry of every single-step scheme, wrapping each one into
// a uniform (problem, t0, y0, h) -> y1 signature for the benchmark harness
// and the CLI.

#include <functional>
#include <string>
#include <vector>

#include "stiffbench/problems.hpp"
#include "stiffbench/schemes_exponential.hpp"
#include "stiffbench/schemes_implicit.hpp"

namespace stiffbench {

enum class SchemeFamily { Implicit, Exponential, Classical };

const char* to_string(SchemeFamily f);

struct SchemeOptions {
  NewtonConfig newton;
  EtdRdpSignMode etd_rdp_sign = etd_rdp_default_sign_mode();
};

struct SchemeDescriptor {
  std::string name;
  SchemeFamily family;
  int order = 0;  // formal order of the underlying method
  std::function<Vec(const OdeProblem&, double t0, const Vec& y0, double h,
                    const SchemeOptions&, StepStats*)>
      step;
};

/// All registered schemes: 4 implicit, 12 exponential, 1 classical.
const std::vector<SchemeDescriptor>& all_schemes();

/// nullptr when the name is unknown.
const SchemeDescriptor* find_scheme(const std::string& name);

std::vector<std::string> scheme_names();

}  // namespace stiffbench
