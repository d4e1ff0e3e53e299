#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coulomb/specfun.hpp"
#include "record.hpp"

namespace cli {

struct EvalArgs {
  std::string family = "F";
  double L = 0.0, L_im = 0.0, eta = 0.0, H = 0.0;
  double z_re = 0.0, z_im = 0.0;
  double tol = 1e-14;
};

struct RadiusArgs {
  std::string family = "f";
  std::optional<double> L, nu, eta, alpha;
  double beta = 0.0;
};

struct RayleighArgs {
  std::string L = "0", eta = "0";  // kept as text so --exact can read them as exact decimals
  int kmax = 2;
  int nmax = 2;
  std::string which = "Z";
  bool exact = false;
};

struct AsymptArgs {
  std::optional<double> eta;
  int N = 1;
  std::vector<double> L;
  bool validate = false;
  std::vector<double> grid{25, 50, 100, 200};
  std::string form = "reconciled";
};

struct FigureArgs {
  int figure = 1;
  int points = 512;
  std::string out;  // stdout when empty
};

OutputRecord cmd_eval(const EvalArgs& a, const coulomb::SeriesOptions& opts);
OutputRecord cmd_radius(const RadiusArgs& a, const coulomb::SeriesOptions& opts);
OutputRecord cmd_rayleigh(const RayleighArgs& a);
OutputRecord cmd_asympt(const AsymptArgs& a, const coulomb::SeriesOptions& opts);
// Writes the CSV curve and returns a record describing it.
OutputRecord cmd_figure(const FigureArgs& a, const coulomb::SeriesOptions& opts);
// Prints the pass/fail table; returns true when every criterion passed.
bool cmd_verify_all(std::ostream& os);

}  // namespace cli
