#pragma once

// Independent checks: boundary-circle scans of Re(z h'/h), zero enumeration
// for Rayleigh sums, the Dini-function sum, and curve data for plots.

#include <vector>

#include "coulomb/exact.hpp"
#include "coulomb/radii.hpp"
#include "coulomb/specfun.hpp"

namespace coulomb::verify {

using radii::Family;

// (L, eta) for the Coulomb families, (nu, alpha) for BESSEL_GEN.
struct FamilyParams {
  cplx L{0.0, 0.0};
  double eta = 0.0;
  double nu = 0.0;
  double alpha = 0.0;

  static FamilyParams coulomb(cplx L, double eta) { return {L, eta, 0.0, 0.0}; }
  static FamilyParams bessel(double nu, double alpha) { return {cplx(0.0, 0.0), 0.0, nu, alpha}; }
};

struct DiskScanReport {
  double radius_scanned = 0.0;
  int grid_size = 0;
  double min_real_part = 0.0;
  double argmin_angle = 0.0;  // in [0, 2 pi)
};

// z h'(z) / h(z) for the normalised function of the family.
cplx log_derivative(Family family, const FamilyParams& p, cplx z, const SeriesOptions& opts = {});

// min over |z| = r of Re(z h'/h), on grid_size equally spaced angles.
DiskScanReport starlike_scan(Family family, const FamilyParams& p, double r, int grid_size = 1024,
                             const SeriesOptions& opts = {});

// min over |z| = r of Re(e^{i theta} z h'/h) for complex L (F_POWER or F_SHIFT).
DiskScanReport spirallike_scan(Family family, cplx L, double eta, double r, double theta, int grid_size = 1024,
                               const SeriesOptions& opts = {});

// l > -1 with l(l+1) = Re[L(L+1)].
double companion_order(cplx L);

// Radius below which the spirallike property is guaranteed through the real
// companion order l: the first zero of F'_l (F_POWER) or of r F'_l - Re(L) F_l (F_SHIFT).
double companion_radius(Family family, cplx L, double eta, const SeriesOptions& opts = {});

// Largest r for which the scan minimum stays positive, found by bisection
// on the (monotone) circle minimum.  `lower` must be a radius with positive minimum.
double sharp_spirallike_radius(Family family, cplx L, double eta, double theta, double lower, int grid_size = 1024,
                               const SeriesOptions& opts = {});

// h(r e^{i t_j}), t_j = 2 pi j / (n - 1), j = 0..n-1.  Fractional powers use
// the branch that is analytic in the disk and positive on (0, r].
std::vector<cplx> boundary_image(Family family, const FamilyParams& p, double r, int n_points,
                                 const SeriesOptions& opts = {});

enum class ZeroSet { F, dF };

struct ZeroSumResult {
  double value = 0.0;
  double tail = 0.0;                  // included in value when requested
  std::vector<double> positive_zeros;  // ascending
  std::vector<double> negative_zeros;  // as positive magnitudes, ascending
};

// sum over the first n_zeros real zeros on each side of the origin of rho^{-k},
// with an integral estimate of what lies beyond.
ZeroSumResult zero_sum_oracle(double L, double eta, ZeroSet which, int k, int n_zeros, bool tail,
                              const SeriesOptions& opts = {});

// sum over positive zeros lambda of z J_nu'(z) + H J_nu(z) of lambda^{-2}.
exact::Rational dini_rayleigh_oracle(const exact::Rational& nu, const exact::Rational& H);

}  // namespace coulomb::verify
