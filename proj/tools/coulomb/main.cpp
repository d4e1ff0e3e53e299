#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"
#include "coulomb/error.hpp"

namespace {

enum Exit { kOk = 0, kFailedCriteria = 1, kUsage = 2, kIo = 3, kNumeric = 4 };

int exit_code(coulomb::ErrorKind kind) {
  using coulomb::ErrorKind;
  switch (kind) {
    case ErrorKind::GateViolation:
    case ErrorKind::DegenerateOrder:
    case ErrorKind::BoundsInvalid:
      return kUsage;
    case ErrorKind::Io:
      return kIo;
    default:
      return kNumeric;
  }
}

coulomb::SeriesOptions series_options_from_env() {
  coulomb::SeriesOptions opts;
  if (const char* s = std::getenv("COULOMB_MAX_TERMS")) {
    try {
      const int n = std::stoi(s);
      if (n > 0) opts.max_terms = n;
    } catch (const std::exception&) {
      std::cerr << "warning: ignoring COULOMB_MAX_TERMS='" << s << "'\n";
    }
  }
  return opts;
}

void report_error(const char* kind, const std::string& message) {
  cli::Json j{{"error", kind}, {"message", message}};
  std::cerr << j.dump() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coulomb wave function radii, Rayleigh sums and asymptotics"};
  app.require_subcommand(1);
  bool csv = false;
  app.add_flag("--csv", csv, "Write outputs as CSV instead of JSON lines");
  app.add_flag("--json", "Write JSON lines (default)");

  cli::EvalArgs eval;
  auto* sub_eval = app.add_subcommand("eval", "Evaluate F, g, f, besselJ or dini at a point");
  sub_eval->add_option("--family", eval.family)->check(CLI::IsMember({"F", "g", "f", "besselJ", "dini"}));
  sub_eval->add_option("--L", eval.L, "L, or nu for besselJ/dini");
  sub_eval->add_option("--L-im", eval.L_im, "Imaginary part of L");
  sub_eval->add_option("--eta", eval.eta);
  sub_eval->add_option("--H", eval.H, "Dini parameter");
  sub_eval->add_option("--z-re", eval.z_re);
  sub_eval->add_option("--z-im", eval.z_im);
  sub_eval->add_option("--tol", eval.tol);

  cli::RadiusArgs radius;
  auto* sub_radius = app.add_subcommand("radius", "Radius of starlikeness of order beta");
  sub_radius->add_option("--family", radius.family)->check(CLI::IsMember({"f", "g", "phi"}));
  sub_radius->add_option("--L", radius.L);
  sub_radius->add_option("--eta", radius.eta);
  sub_radius->add_option("--nu", radius.nu);
  sub_radius->add_option("--alpha", radius.alpha);
  sub_radius->add_option("--beta", radius.beta);

  cli::RayleighArgs rayleigh;
  auto* sub_rayleigh = app.add_subcommand("rayleigh", "Rayleigh sums and zeta coefficient polynomials");
  sub_rayleigh->add_option("--L", rayleigh.L);
  sub_rayleigh->add_option("--eta", rayleigh.eta);
  sub_rayleigh->add_option("--kmax", rayleigh.kmax);
  sub_rayleigh->add_option("--nmax", rayleigh.nmax, "Laurent order for --which zeta");
  sub_rayleigh->add_option("--which", rayleigh.which)->check(CLI::IsMember({"Z", "Ztilde", "zeta"}));
  sub_rayleigh->add_flag("--exact", rayleigh.exact, "Rational arithmetic on decimal inputs");

  cli::AsymptArgs asympt;
  auto* sub_asympt = app.add_subcommand("asympt", "Large-L expansion of the radius of starlikeness");
  sub_asympt->add_option("--eta", asympt.eta);
  sub_asympt->add_option("--N", asympt.N);
  sub_asympt->add_option("--L", asympt.L)->delimiter(',');
  sub_asympt->add_flag("--validate", asympt.validate, "Fit the error order against direct radii");
  sub_asympt->add_option("--grid", asympt.grid)->delimiter(',');
  sub_asympt->add_option("--form", asympt.form)->check(CLI::IsMember({"reconciled", "printed"}));

  cli::FigureArgs figure;
  auto* sub_figure = app.add_subcommand("figure", "Boundary image curve as CSV (t,re,im)");
  sub_figure->add_option("--figure", figure.figure)->check(CLI::IsMember({1, 2}));
  sub_figure->add_option("--points", figure.points);
  sub_figure->add_option("--out", figure.out, "Output file; stdout when omitted");

  auto* sub_verify = app.add_subcommand("verify-all", "Run the acceptance criteria");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  const auto fmt = csv ? cli::Format::Csv : cli::Format::Json;
  const auto opts = series_options_from_env();
  try {
    if (sub_verify->parsed()) return cli::cmd_verify_all(std::cout) ? kOk : kFailedCriteria;

    cli::OutputRecord rec;
    if (sub_eval->parsed()) rec = cli::cmd_eval(eval, opts);
    else if (sub_radius->parsed()) rec = cli::cmd_radius(radius, opts);
    else if (sub_rayleigh->parsed()) rec = cli::cmd_rayleigh(rayleigh);
    else if (sub_asympt->parsed()) rec = cli::cmd_asympt(asympt, opts);
    else if (sub_figure->parsed()) {
      rec = cli::cmd_figure(figure, opts);
      // the curve itself owns stdout when no file was given
      cli::emit(rec, fmt, figure.out.empty() ? std::cerr : std::cout);
      return kOk;
    }
    cli::emit(rec, fmt, std::cout);
    std::cout.flush();
    if (!std::cout) {
      report_error("Io", "write to stdout failed");
      return kIo;
    }
  } catch (const coulomb::Error& e) {
    report_error(coulomb::to_string(e.kind()), e.what());
    return exit_code(e.kind());
  } catch (const std::invalid_argument& e) {
    report_error("GateViolation", e.what());
    return kUsage;
  } catch (const std::exception& e) {
    report_error("Internal", e.what());
    return kNumeric;
  }
  return kOk;
}
