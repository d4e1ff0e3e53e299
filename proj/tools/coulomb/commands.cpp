#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>

#include "coulomb/acceptance.hpp"
#include "coulomb/asympt.hpp"
#include "coulomb/error.hpp"
#include "coulomb/exact.hpp"
#include "coulomb/radii.hpp"
#include "coulomb/rayleigh.hpp"
#include "coulomb/verify.hpp"

namespace cli {

using coulomb::cplx;
using coulomb::Error;
using coulomb::ErrorKind;
using coulomb::SeriesOptions;

namespace {

void put_complex(Json& j, const std::string& key, cplx v) {
  j[key + "_re"] = v.real();
  j[key + "_im"] = v.imag();
}

std::string key(const std::string& base, int i) { return base + "[" + std::to_string(i) + "]"; }

}  // namespace

OutputRecord cmd_eval(const EvalArgs& a, const SeriesOptions& base) {
  OutputRecord rec;
  rec.command = "eval";
  rec.inputs = {{"family", a.family}, {"L", a.L},       {"L_im", a.L_im}, {"eta", a.eta},
                {"z_re", a.z_re},     {"z_im", a.z_im}, {"tol", a.tol}};
  SeriesOptions opts = base;
  opts.tol = a.tol;
  const cplx z(a.z_re, a.z_im);
  const coulomb::CoulombParams params{cplx(a.L, a.L_im), a.eta};

  coulomb::SeriesEval ev;
  bool has_derivative = true;
  if (a.family == "F") {
    ev = coulomb::specfun::eval_F_series(params, z, opts);
  } else if (a.family == "g") {
    ev = coulomb::specfun::eval_g(params, z, opts);
  } else if (a.family == "f") {
    // f = z u^{1/(L+1)} with the principal logarithm of u = g/z
    const cplx L1 = params.L + 1.0;
    if (z == cplx(0.0, 0.0)) {
      ev = {0.0, 1.0, 1, 0.0};
    } else {
      const auto s = coulomb::specfun::eval_u_scaled(params, z, opts);
      const cplx logu = std::log(s.v) + static_cast<double>(s.exp2) * std::numbers::ln2;
      const cplx f = z * std::exp(logu / L1);
      ev.value = f;
      ev.derivative = f / z * (1.0 + s.zd1 / (L1 * s.v));
      ev.terms_used = s.terms_used;
      ev.est_error = std::abs(f) * s.rel_error;
    }
    rec.diagnostics.push_back("principal branch of u^(1/(L+1)), u = g/z");
  } else if (a.family == "besselJ") {
    rec.inputs["nu"] = a.L;
    ev = coulomb::specfun::eval_bessel_j(a.L, z, opts);
  } else if (a.family == "dini") {
    rec.inputs["nu"] = a.L;
    rec.inputs["H"] = a.H;
    if (a.z_im != 0.0) throw Error(ErrorKind::GateViolation, "dini requires a real argument (z-im = 0)");
    ev.value = coulomb::specfun::eval_dini(a.L, a.H, a.z_re, opts);
    has_derivative = false;
  } else {
    throw Error(ErrorKind::GateViolation, "unknown family '" + a.family + "'");
  }
  put_complex(rec.outputs, "value", ev.value);
  if (has_derivative) put_complex(rec.outputs, "derivative", ev.derivative);
  rec.outputs["terms_used"] = ev.terms_used;
  rec.outputs["est_error"] = ev.est_error;
  return rec;
}

OutputRecord cmd_radius(const RadiusArgs& a, const SeriesOptions& opts) {
  OutputRecord rec;
  rec.command = "radius";
  rec.inputs["family"] = a.family;
  coulomb::radii::RadiusResult r;
  auto need = [](const std::optional<double>& v, const char* flag) {
    if (!v) throw Error(ErrorKind::GateViolation, std::string("missing ") + flag);
    return *v;
  };
  if (a.family == "f" || a.family == "g") {
    const double L = need(a.L, "--L"), eta = need(a.eta, "--eta");
    rec.inputs["L"] = L;
    rec.inputs["eta"] = eta;
    rec.inputs["beta"] = a.beta;
    r = a.family == "f" ? coulomb::radii::radius_f(L, eta, a.beta, opts) : coulomb::radii::radius_g(L, eta, a.beta, opts);
  } else if (a.family == "phi") {
    const double nu = need(a.nu, "--nu"), alpha = need(a.alpha, "--alpha");
    rec.inputs["nu"] = nu;
    rec.inputs["alpha"] = alpha;
    rec.inputs["beta"] = a.beta;
    r = coulomb::radii::radius_phi(nu, alpha, a.beta, opts);
  } else {
    throw Error(ErrorKind::GateViolation, "unknown family '" + a.family + "'");
  }
  rec.outputs = {{"value", r.value},         {"bracket_lo", r.lo},          {"bracket_hi", r.hi},
                 {"residual", r.residual},   {"iterations", r.iterations},  {"double_root", r.double_root},
                 {"small_root", r.small_root}};
  if (r.double_root) rec.diagnostics.push_back("root found as a near double root; bracket widened to the dip");
  if (r.small_root) rec.diagnostics.push_back("root lies within ten scan steps of the origin");
  return rec;
}

OutputRecord cmd_rayleigh(const RayleighArgs& a) {
  namespace ry = coulomb::rayleigh;
  using coulomb::exact::Rational;
  OutputRecord rec;
  rec.command = "rayleigh";
  rec.inputs = {{"L", a.L}, {"eta", a.eta}, {"kmax", a.kmax}, {"which", a.which}, {"exact", a.exact}};
  if (a.kmax < 2) throw Error(ErrorKind::GateViolation, "requires kmax >= 2");

  if (a.which == "zeta") {
    rec.inputs["nmax"] = a.nmax;
    if (a.nmax < 0) throw Error(ErrorKind::GateViolation, "requires nmax >= 0");
    const ry::ZetaTable t(a.kmax, a.nmax);
    for (int k = 2; k <= a.kmax; ++k)
      for (int n = 0; n <= a.nmax; ++n) rec.outputs["zeta[" + std::to_string(k) + "][" + std::to_string(n) + "]"] = t.at(k, n).str();
    return rec;
  }
  if (a.which != "Z" && a.which != "Ztilde") throw Error(ErrorKind::GateViolation, "unknown --which '" + a.which + "'");
  const bool tilde = a.which == "Ztilde";
  const std::string name = tilde ? "Ztilde" : "Z";
  if (a.exact) {
    Rational L, eta;
    try {
      L = Rational::parse(a.L);
      eta = Rational::parse(a.eta);
    } catch (const std::exception&) {
      throw Error(ErrorKind::GateViolation, "--exact requires rational L and eta");
    }
    const auto t = tilde ? ry::rayleigh_Ztilde(L, eta, a.kmax) : ry::rayleigh_Z(L, eta, a.kmax);
    for (int k = 2; k <= a.kmax; ++k) rec.outputs[key(name, k)] = t.at(k).str();
  } else {
    bool used_exact = false;
    const auto v = ry::rayleigh_values(tilde ? ry::Which::Ztilde : ry::Which::Z, std::stod(a.L), std::stod(a.eta), a.kmax,
                                       &used_exact);
    for (int k = 2; k <= a.kmax; ++k) rec.outputs[key(name, k)] = v[static_cast<std::size_t>(k)];
    rec.diagnostics.push_back(used_exact ? "computed exactly on the binary inputs" : "float recurrence");
  }
  return rec;
}

OutputRecord cmd_asympt(const AsymptArgs& a, const SeriesOptions& opts) {
  namespace as = coulomb::asympt;
  OutputRecord rec;
  rec.command = "asympt";
  rec.inputs = {{"N", a.N}, {"form", a.form}, {"validate", a.validate}};
  if (a.eta) rec.inputs["eta"] = *a.eta;
  if (a.N < 0) throw Error(ErrorKind::GateViolation, "requires N >= 0");
  if (a.form != "reconciled" && a.form != "printed") throw Error(ErrorKind::GateViolation, "unknown --form '" + a.form + "'");
  const auto form = a.form == "reconciled" ? as::Form::Reconciled : as::Form::AsPrinted;
  const auto table = as::epsilon_coeffs(std::max(a.N, 1), form);

  rec.outputs["c"] = table.c.str();
  for (int k = 1; k <= a.N; ++k) rec.outputs[key("eps", k)] = table.at(k).str(coulomb::exact::TermOrder::Descending);

  const auto res = as::annihilation_residuals(table, a.N);
  int through = -1;
  while (through + 1 <= a.N && coulomb::exact::is_zero(res[static_cast<std::size_t>(through) + 1])) ++through;
  rec.outputs["annihilated_through"] = through;
  if (through < a.N) rec.diagnostics.push_back("inversion equation not annihilated at order " + std::to_string(through + 1));

  if ((!a.L.empty() || a.validate) && !a.eta) throw Error(ErrorKind::GateViolation, "--L and --validate require --eta");
  if (!a.L.empty()) {
    rec.inputs["L"] = a.L;
    for (double L : a.L) rec.outputs["r_asym@" + Json(L).dump()] = as::radius_asymptotic(table, L, *a.eta, a.N);
  }
  if (a.validate) {
    if (!(*a.eta <= 0.0)) throw Error(ErrorKind::GateViolation, "requires eta <= 0");
    rec.inputs["grid"] = a.grid;
    std::vector<double> direct;
    for (double L : a.grid) direct.push_back(coulomb::radii::radius_f(L, *a.eta, 0.0, opts).value);
    const auto fit = as::empirical_order(a.grid, direct, *a.eta, a.N, table);
    rec.outputs["slope"] = fit.slope;
    rec.outputs["slope_target"] = -(a.N + 1.0);
    rec.outputs["fit_residual"] = fit.residual;
    for (std::size_t i = 0; i < a.grid.size(); ++i) {
      const std::string at = "@" + Json(a.grid[i]).dump();
      rec.outputs["r_direct" + at] = direct[i];
      rec.outputs["scaled_error" + at] = fit.scaled_error[i];
    }
    if (std::abs(fit.slope + (a.N + 1.0)) > 0.5) rec.diagnostics.push_back("slope outside the window -(N+1) +- 0.5");
  }
  return rec;
}

OutputRecord cmd_figure(const FigureArgs& a, const SeriesOptions& opts) {
  namespace vf = coulomb::verify;
  OutputRecord rec;
  rec.command = "figure";
  rec.inputs = {{"figure", a.figure}, {"points", a.points}, {"out", a.out}};
  if (a.figure != 1 && a.figure != 2) throw Error(ErrorKind::GateViolation, "requires --figure 1 or 2");
  if (a.points < 2) throw Error(ErrorKind::GateViolation, "requires --points >= 2");

  vf::Family family;
  vf::FamilyParams p;
  double r;
  if (a.figure == 1) {
    family = vf::Family::F_POWER;
    p = vf::FamilyParams::coulomb(-0.5, 0.0);
    r = coulomb::radii::radius_f(-0.5, 0.0, 0.0, opts).value;
  } else {
    family = vf::Family::F_SHIFT;
    p = vf::FamilyParams::coulomb(0.0, 0.0);
    r = coulomb::radii::radius_g(0.0, 0.0, 0.0, opts).value;
  }
  const auto pts = vf::boundary_image(family, p, r, a.points, opts);

  std::ofstream file;
  if (!a.out.empty()) {
    file.open(a.out);
    if (!file) throw Error(ErrorKind::Io, "cannot open '" + a.out + "' for writing");
  }
  std::ostream& os = a.out.empty() ? std::cout : file;
  os << "t,re,im\n";
  char line[128];
  for (int j = 0; j < a.points; ++j) {
    const double t = 2.0 * std::numbers::pi * j / (a.points - 1);
    std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g\n", t, pts[j].real(), pts[j].imag());
    os << line;
  }
  os.flush();
  if (!os) throw Error(ErrorKind::Io, "write failed for '" + (a.out.empty() ? std::string("stdout") : a.out) + "'");
  rec.outputs = {{"family", coulomb::radii::to_string(family)}, {"radius", r}, {"points", a.points}};
  return rec;
}

bool cmd_verify_all(std::ostream& os) {
  const auto results = coulomb::acceptance::run_acceptance();
  int passed = 0;
  for (const auto& r : results) {
    os << coulomb::acceptance::format_line(r) << '\n';
    passed += r.passed;
  }
  os << passed << "/" << results.size() << " criteria passed\n";
  return passed == static_cast<int>(results.size());
}

}  // namespace cli
