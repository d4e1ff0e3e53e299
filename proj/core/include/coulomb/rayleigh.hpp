#pragma once

// Rayleigh sums of the zeros of F_{L,eta} (Z) and of its derivative (Ztilde),
// the 1/L Laurent coefficients zeta, and Euler-Rayleigh bounds.
// Templates are instantiated for exact::Rational and double.

#include <vector>

#include "coulomb/exact.hpp"

namespace coulomb::rayleigh {

template <class R>
struct RayleighTable {
  R L{};
  R eta{};
  int k_max = 0;
  std::vector<R> values;   // values[k] for 2 <= k <= k_max; lower slots unused
  double condition = 1.0;  // float mode: worst sum|contributions| / |result|

  const R& at(int k) const;
};

template <class R>
RayleighTable<R> rayleigh_Z(const R& L, const R& eta, int k_max);

// Coefficients of 2(x - eta) / (x^2 - 2 eta x - L(L+1)) = sum a_n x^n.
template <class R>
std::vector<R> gen_coeffs_a(const R& L, const R& eta, int n_max);

template <class R>
RayleighTable<R> rayleigh_Ztilde(const R& L, const R& eta, int k_max);

struct EulerRayleighBounds {
  int s = 1;
  double lower = 0.0;  // bounds on the square of the first zero of F'
  double upper = 0.0;
};

template <class R>
EulerRayleighBounds euler_rayleigh_bounds(const R& L, const R& eta, int s);

// Values for double inputs: exact arithmetic on the binary value of the
// inputs when k_max <= 40, float recurrences otherwise.
enum class Which { Z, Ztilde };
std::vector<double> rayleigh_values(Which which, double L, double eta, int k_max, bool* used_exact = nullptr);

// zeta^{(j)}_n as exact polynomials in eta, 2 <= j <= k_max, 0 <= n <= n_max.
class ZetaTable {
 public:
  ZetaTable(int k_max, int n_max);
  int k_max() const { return k_max_; }
  int n_max() const { return n_max_; }
  // Throws std::logic_error when (j, n) lies outside the materialised table.
  const exact::EtaPolynomial& at(int j, int n) const;

 private:
  int k_max_, n_max_;
  std::vector<std::vector<exact::EtaPolynomial>> z_;
};

std::vector<exact::EtaPolynomial> zeta_coeffs(int k, int n_max);

struct LaurentValue {
  double value = 0.0;
  bool in_region = true;  // false when L <= floor(k/2) + 1
};
LaurentValue zeta_laurent_eval(int k, double L, double eta, int n_terms);

}  // namespace coulomb::rayleigh
