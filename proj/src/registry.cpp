#include "stiffbench/registry.hpp"

#include "stiffbench/schemes_classical.hpp"

namespace stiffbench {

const char* to_string(SchemeFamily f) {
  switch (f) {
    case SchemeFamily::Implicit: return "implicit";
    case SchemeFamily::Exponential: return "exponential";
    case SchemeFamily::Classical: return "classical";
  }
  return "?";
}

namespace {

using ExpStep = Vec (*)(const Linearization&, double, StepStats*);

SchemeDescriptor exp_scheme(std::string name, int order, ExpStep fn) {
  SchemeDescriptor d;
  d.name = std::move(name);
  d.family = SchemeFamily::Exponential;
  d.order = order;
  d.step = [fn](const OdeProblem& p, double t0, const Vec& y0, double h,
                const SchemeOptions&, StepStats* stats) {
    return fn(linearize(p, t0, y0), h, stats);
  };
  return d;
}

std::vector<SchemeDescriptor> build_registry() {
  std::vector<SchemeDescriptor> r;

  SchemeDescriptor be;
  be.name = "backward_euler";
  be.family = SchemeFamily::Implicit;
  be.order = 1;
  be.step = [](const OdeProblem& p, double t0, const Vec& y0, double h,
               const SchemeOptions& o, StepStats* s) {
    return backward_euler_step(p, t0, y0, h, o.newton, s);
  };
  r.push_back(be);

  SchemeDescriptor tr;
  tr.name = "trapezoid";
  tr.family = SchemeFamily::Implicit;
  tr.order = 2;
  tr.step = [](const OdeProblem& p, double t0, const Vec& y0, double h,
               const SchemeOptions& o, StepStats* s) {
    return trapezoid_step(p, t0, y0, h, o.newton, s);
  };
  r.push_back(tr);

  SchemeDescriptor r3;
  r3.name = "radau3";
  r3.family = SchemeFamily::Implicit;
  r3.order = 3;
  r3.step = [](const OdeProblem& p, double t0, const Vec& y0, double h,
               const SchemeOptions& o, StepStats* s) {
    return radau_step(p, t0, y0, h, radau3_tableau(), o.newton, s);
  };
  r.push_back(r3);

  SchemeDescriptor r5;
  r5.name = "radau5";
  r5.family = SchemeFamily::Implicit;
  r5.order = 5;
  r5.step = [](const OdeProblem& p, double t0, const Vec& y0, double h,
               const SchemeOptions& o, StepStats* s) {
    return radau_step(p, t0, y0, h, radau5_tableau(), o.newton, s);
  };
  r.push_back(r5);

  SchemeDescriptor rk;
  rk.name = "rk4";
  rk.family = SchemeFamily::Classical;
  rk.order = 4;
  rk.step = [](const OdeProblem& p, double t0, const Vec& y0, double h,
               const SchemeOptions&, StepStats*) { return rk4_step(p, t0, y0, h); };
  r.push_back(rk);

  r.push_back(exp_scheme("if_euler", 1, &if_euler_step));
  r.push_back(exp_scheme("if2rk", 2, &if2rk_step));
  r.push_back(exp_scheme("etd1", 1, &etd1_step));
  r.push_back(exp_scheme("etd2rk", 2, &etd2rk_step));
  r.push_back(exp_scheme("etd4rk", 4, &etd4rk_step));
  r.push_back(exp_scheme("rkmk2e", 2, &rkmk2e_step));

  SchemeDescriptor rdp;
  rdp.name = "etd_rdp";
  rdp.family = SchemeFamily::Exponential;
  rdp.order = 2;
  rdp.step = [](const OdeProblem& p, double t0, const Vec& y0, double h,
                const SchemeOptions& o, StepStats* s) {
    return etd_rdp_step(linearize(p, t0, y0), h, o.etd_rdp_sign, s);
  };
  r.push_back(rdp);

  r.push_back(exp_scheme("epi2", 2, &epi2_step));
  r.push_back(exp_scheme("epirk3", 3, &epirk3_step));
  r.push_back(exp_scheme("etd1rk4", 2, &etd1rk4_step));
  r.push_back(exp_scheme("essprk", 3, &essprk_step));
  r.push_back(exp_scheme("essprk_plus", 3, &essprk_plus_step));

  return r;
}

}  // namespace

const std::vector<SchemeDescriptor>& all_schemes() {
  static const std::vector<SchemeDescriptor> reg = build_registry();
  return reg;
}

const SchemeDescriptor* find_scheme(const std::string& name) {
  for (const auto& s : all_schemes())
    if (s.name == name) return &s;
  return nullptr;
}

std::vector<std::string> scheme_names() {
  std::vector<std::string> names;
  for (const auto& s : all_schemes()) names.push_back(s.name);
  return names;
}

}  // namespace stiffbench
