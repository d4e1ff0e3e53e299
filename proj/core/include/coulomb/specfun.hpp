#pragma once

#include <complex>
#include <vector>

#include "coulomb/exact.hpp"

namespace coulomb {

using cplx = std::complex<double>;

// Order L (complex allowed for evaluation) and Sommerfeld parameter eta.
struct CoulombParams {
  cplx L{0.0, 0.0};
  double eta = 0.0;
};

struct SeriesOptions {
  double tol = 1e-14;    // relative target, must lie in (1e-16, 1e-6)
  int max_terms = 10000;
};

struct SeriesEval {
  cplx value;
  cplx derivative;
  int terms_used = 0;
  double est_error = 0.0;  // absolute error estimate on value
};

// A power series v(z) = sum t_n together with z v'(z) and z^2 v''(z).
// True values are mantissa * 2^exp2, which keeps large orders representable.
struct ScaledSeries {
  cplx v, zd1, zzd2;
  long exp2 = 0;
  int terms_used = 0;
  double rel_error = 0.0;  // relative to |v| + |z v'|
  int digits = 0;          // decimal digits of the precision tier that was used
};

namespace specfun {

// Coefficients a_{L,0..n_max} of g_{L,eta}(z) = sum a_n z^{n+1}.
std::vector<exact::Rational> coulomb_series_coeffs(const exact::Rational& L, const exact::Rational& eta, int n_max);
std::vector<cplx> coulomb_series_coeffs(const CoulombParams& params, int n_max);

// u(z) = sum a_n z^n, i.e. g = z u.  Precision escalates automatically.
ScaledSeries eval_u_scaled(const CoulombParams& params, cplx z, const SeriesOptions& opts = {});

// psi_nu(z) = 0F1(; nu+1; -z^2/4) = Gamma(nu+1) (2/z)^nu J_nu(z).
ScaledSeries eval_psi_scaled(double nu, cplx z, const SeriesOptions& opts = {});

SeriesEval eval_g(const CoulombParams& params, cplx z, const SeriesOptions& opts = {});

struct GTriple {
  cplx g, dg, d2g;
};
// g, g', g'' at z; all three share the same (possibly nonzero) binary scale.
GTriple eval_g_triple(const CoulombParams& params, cplx z, long& exp2, const SeriesOptions& opts = {});

cplx log_gamma(cplx z);
// log C_L(eta); for complex L the symmetric continuation of log|Gamma(L+1+i eta)| is used.
cplx log_coulomb_C(const CoulombParams& params);

cplx eval_F(const CoulombParams& params, cplx z, const SeriesOptions& opts = {});
SeriesEval eval_F_series(const CoulombParams& params, cplx z, const SeriesOptions& opts = {});

SeriesEval eval_bessel_j(double nu, cplx z, const SeriesOptions& opts = {});
double eval_dini(double nu, double H, double r, const SeriesOptions& opts = {});

}  // namespace specfun

// Real-axis solution of the u-equation  z u'' + 2(L+1) u' + (z - 2 eta) u = 0
// by Taylor re-expansion, for long stretches of the positive axis where the
// power series loses too many digits.  Dense output; values are scaled.
class RealAxisSolution {
 public:
  RealAxisSolution(double L, double eta, double r_max, const SeriesOptions& opts = {});

  struct Point {
    double u = 0.0, du = 0.0;
    long exp2 = 0;
  };
  Point at(double r) const;
  double r_max() const { return r_max_; }
  double r_start() const { return r_start_; }
  // Segment end points in increasing order, useful as a scan grid.
  std::vector<double> knots() const;

 private:
  struct Segment {
    double z0, h;
    std::vector<double> c;  // Taylor coefficients of u about z0, scaled by 2^exp2
    long exp2;
  };
  double L_, eta_, r_max_, r_start_;
  SeriesOptions opts_;
  std::vector<Segment> seg_;
};

}  // namespace coulomb
