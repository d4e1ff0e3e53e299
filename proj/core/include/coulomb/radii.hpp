#pragma once

#include <functional>

#include "coulomb/specfun.hpp"

namespace coulomb::radii {

enum class Family { F_POWER, F_SHIFT, BESSEL_GEN };

const char* to_string(Family f);

struct RadiusResult {
  double value = 0.0;
  double lo = 0.0, hi = 0.0;  // final bracket
  double residual = 0.0;      // defining function at value, relative to its own scale
  int iterations = 0;         // function evaluations
  bool double_root = false;   // touched zero without a detectable sign change
  bool small_root = false;    // root fell below ten scan steps
};

// One evaluation of a root function: value and a positive magnitude that
// sets the scale for the residual test.
struct Sample {
  double value = 0.0;
  double scale = 1.0;
};

struct ScanOptions {
  double start = 0.0;    // scan begins just above this point
  double step = 0.05;    // initial step
  double ceiling = 100.0;
  double tol = 1e-14;    // relative bracket width
};

// First sign change of fn on (start, ceiling], refined by bisection and a
// final secant step.  fn must be positive just above start.
RadiusResult smallest_positive_root(const std::function<Sample(double)>& fn, const ScanOptions& opts);

// Radius of starlikeness of order beta of f_{L,eta}; root of r g' + (L - beta(L+1)) g.
RadiusResult radius_f(double L, double eta, double beta, const SeriesOptions& opts = {});
// Radius of starlikeness of order beta of g_{L,eta}; root of r g' - beta g.
RadiusResult radius_g(double L, double eta, double beta, const SeriesOptions& opts = {});
// Radius of starlikeness of order beta of phi_{nu,alpha}; root of
// (alpha - beta(nu+alpha)) J_nu + r J_nu'.
RadiusResult radius_phi(double nu, double alpha, double beta, const SeriesOptions& opts = {});

// The reduced functions themselves, normalised so that only the sign and
// relative size matter.  Exposed for scans and tests.
Sample reduced_f(double L, double eta, double beta, double r, const SeriesOptions& opts = {});
Sample reduced_g(double L, double eta, double beta, double r, const SeriesOptions& opts = {});
Sample reduced_phi(double nu, double alpha, double beta, double r, const SeriesOptions& opts = {});

}  // namespace coulomb::radii
