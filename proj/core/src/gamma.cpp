#include <cmath>
#include <numbers>

#include "coulomb/error.hpp"
#include "coulomb/specfun.hpp"

namespace coulomb::specfun {

namespace {

// log sin(w) that stays finite when |Im w| is large.
cplx log_sin(cplx w) {
  const cplx i(0.0, 1.0);
  if (w.imag() > 20.0) return -i * w - std::log(2.0) + i * (std::numbers::pi / 2);
  if (w.imag() < -20.0) return i * w - std::log(2.0) - i * (std::numbers::pi / 2);
  return std::log(std::sin(w));
}

}  // namespace

cplx log_gamma(cplx z) {
  if (z.imag() == 0.0 && z.real() <= 0.0 && std::floor(z.real()) == z.real())
    throw Error(ErrorKind::DegenerateOrder, "log_gamma: pole at a nonpositive integer");

  if (z.real() < 0.5) {
    const double pi = std::numbers::pi;
    return std::log(pi) - log_sin(pi * z) - log_gamma(1.0 - z);
  }

  cplx shift(0.0, 0.0);
  while (z.real() < 15.0) {
    shift += std::log(z);
    z += 1.0;
  }

  // Stirling series with Bernoulli numbers B_2 .. B_16.
  static constexpr double b[] = {1.0 / 6,   -1.0 / 30,     1.0 / 42, -1.0 / 30,
                                 5.0 / 66,  -691.0 / 2730, 7.0 / 6,  -3617.0 / 510};
  const cplx inv = 1.0 / z;
  const cplx inv2 = inv * inv;
  cplx corr(0.0, 0.0);
  cplx p = inv;
  for (int k = 1; k <= 8; ++k) {
    corr += b[k - 1] / (2.0 * k * (2.0 * k - 1)) * p;
    p *= inv2;
  }
  const cplx lg = (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * std::numbers::pi) + corr;
  return lg - shift;
}

cplx log_coulomb_C(const CoulombParams& params) {
  const cplx L = params.L;
  const double eta = params.eta;
  if (std::abs(L) > 1e8) throw Error(ErrorKind::GammaOverflow, "log_coulomb_C: |L| beyond the supported range");
  const cplx i(0.0, 1.0);
  const cplx lg_plus = log_gamma(L + 1.0 + i * eta);
  const cplx lg_minus = log_gamma(L + 1.0 - i * eta);
  const cplx out = L * std::log(2.0) - std::numbers::pi * eta / 2 + 0.5 * (lg_plus + lg_minus) -
                   log_gamma(2.0 * L + 2.0);
  if (!std::isfinite(out.real())) throw Error(ErrorKind::GammaOverflow, "log_coulomb_C: non-finite result");
  return out;
}

}  // namespace coulomb::specfun
