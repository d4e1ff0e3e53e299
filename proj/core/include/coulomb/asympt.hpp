#pragma once

// Large-L expansion of the radius of starlikeness of f_{L,eta}:
//   r* ~ L (c + sum_k eps_k(eta) / L^k),
// with eps_k computed exactly in Q(sqrt2)[eta].

#include <vector>

#include "coulomb/exact.hpp"

namespace coulomb::asympt {

using exact::EtaPolynomialSqrt2;
using exact::QSqrt2;

// Reconciled: coefficient of L^{-(n+2)} of the inversion equation, with the
//   powers (c + eps)^{m+1} expanded in full.
// AsPrinted: the closed recurrence exactly as usually quoted, whose eta term
//   and potential-polynomial factors disagree with the inversion equation.
enum class Form { Reconciled, AsPrinted };

struct EpsilonTable {
  QSqrt2 c;
  std::vector<EtaPolynomialSqrt2> eps;  // eps[k-1] holds eps_k
  Form form = Form::Reconciled;

  int size() const { return static_cast<int>(eps.size()); }
  const EtaPolynomialSqrt2& at(int k) const;  // 1-based
};

EpsilonTable epsilon_coeffs(int N, Form form = Form::Reconciled);

// L (c + sum_{k<=N} eps_k(eta) / L^k).
double radius_asymptotic(const EpsilonTable& table, double L, double eta, int N);

// Coefficients of x^0..x^N (x = 1/L) of  RHS - 1  of the inversion equation
// after substituting c + sum_{k<=N} eps_k x^k.  All zero when the table is right.
std::vector<EtaPolynomialSqrt2> annihilation_residuals(const EpsilonTable& table, int N);

struct OrderFit {
  double slope = 0.0;
  double intercept = 0.0;
  double residual = 0.0;            // rms deviation of the log-log fit
  std::vector<double> scaled_error;  // |r_direct - r_asym| / L per grid point
};

// Least-squares slope of log(|r_direct - r_asym(N)| / L) against log L.
OrderFit empirical_order(const std::vector<double>& L_grid, const std::vector<double>& direct, double eta, int N,
                         const EpsilonTable& table);
// Same, computing the direct radii with radii::radius_f.
OrderFit empirical_order(const std::vector<double>& L_grid, double eta, int N, const EpsilonTable& table);

}  // namespace coulomb::asympt
