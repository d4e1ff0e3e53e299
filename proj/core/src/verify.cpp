#include "coulomb/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <string>

#include "coulomb/error.hpp"

namespace coulomb::verify {

namespace {

constexpr double kPi = std::numbers::pi;

ScaledSeries base_series(Family family, const FamilyParams& p, cplx z, const SeriesOptions& opts) {
  if (family == Family::BESSEL_GEN) return specfun::eval_psi_scaled(p.nu, z, opts);
  return specfun::eval_u_scaled({p.L, p.eta}, z, opts);
}

// h = z * base^(1/exponent) for F_POWER and BESSEL_GEN; exponent 1 for F_SHIFT.
cplx exponent_of(Family family, const FamilyParams& p) {
  switch (family) {
    case Family::F_POWER: return p.L + 1.0;
    case Family::F_SHIFT: return 1.0;
    case Family::BESSEL_GEN: return p.nu + p.alpha;
  }
  return 1.0;
}

// The scans assume no zero of h on the segment (0, r]; for real
// parameters a sign change of the base series there is a cheap witness.
void check_no_real_zero(Family family, const FamilyParams& p, double r, const SeriesOptions& opts) {
  if (p.L.imag() != 0.0) return;
  constexpr int kSamples = 256;
  for (int i = 1; i <= kSamples; ++i) {
    const double x = r * i / kSamples;
    if (!(base_series(family, p, cplx(x, 0.0), opts).v.real() > 0.0))
      throw Error(ErrorKind::GateViolation,
                  "scan radius " + std::to_string(r) + " reaches a zero of the normalised function");
  }
}

double wrap(double a) { return a - 2.0 * kPi * std::round(a / (2.0 * kPi)); }

}  // namespace

cplx log_derivative(Family family, const FamilyParams& p, cplx z, const SeriesOptions& opts) {
  const ScaledSeries s = base_series(family, p, z, opts);
  if (std::abs(s.v) < 1e-13 * (std::abs(s.v) + std::abs(s.zd1)))
    throw Error(ErrorKind::PoleOnCircle, "normalised function vanishes on the scan circle");
  return 1.0 + s.zd1 / (exponent_of(family, p) * s.v);
}

DiskScanReport starlike_scan(Family family, const FamilyParams& p, double r, int grid_size,
                             const SeriesOptions& opts) {
  if (!(r > 0.0)) throw std::invalid_argument("starlike_scan: r must be positive");
  if (grid_size < 256) throw std::invalid_argument("starlike_scan: grid_size must be at least 256");
  check_no_real_zero(family, p, r, opts);
  DiskScanReport rep{r, grid_size, INFINITY, 0.0};
  for (int j = 0; j < grid_size; ++j) {
    const double t = 2.0 * kPi * j / grid_size;
    const double re = log_derivative(family, p, std::polar(r, t), opts).real();
    if (re < rep.min_real_part) {
      rep.min_real_part = re;
      rep.argmin_angle = t;
    }
  }
  return rep;
}

DiskScanReport spirallike_scan(Family family, cplx L, double eta, double r, double theta, int grid_size,
                               const SeriesOptions& opts) {
  if (!(eta <= 0.0)) throw Error(ErrorKind::GateViolation, "requires eta <= 0");
  if (family == Family::F_POWER) {
    if (!(L.real() > -1.0)) throw Error(ErrorKind::GateViolation, "requires Re L > -1");
    if (!(std::abs(std::arg(L + 1.0)) < kPi / 4)) throw Error(ErrorKind::GateViolation, "requires |arg(L+1)| < pi/4");
  } else if (family == Family::F_SHIFT) {
    const double x = L.real(), y = L.imag();
    if (!(x < 1.0)) throw Error(ErrorKind::GateViolation, "requires Re L < 1");
    if (!(y * y < x * (x + 1.0) + 0.25)) throw Error(ErrorKind::GateViolation, "requires (Im L)^2 < x(x+1) + 1/4");
  } else {
    throw std::invalid_argument("spirallike_scan: only the Coulomb families are supported");
  }
  if (!(r > 0.0)) throw std::invalid_argument("spirallike_scan: r must be positive");
  if (grid_size < 256) throw std::invalid_argument("spirallike_scan: grid_size must be at least 256");

  const FamilyParams p = FamilyParams::coulomb(L, eta);
  check_no_real_zero(family, p, r, opts);
  const cplx rot = std::polar(1.0, theta);
  DiskScanReport rep{r, grid_size, INFINITY, 0.0};
  for (int j = 0; j < grid_size; ++j) {
    const double t = 2.0 * kPi * j / grid_size;
    const double re = (rot * log_derivative(family, p, std::polar(r, t), opts)).real();
    if (re < rep.min_real_part) {
      rep.min_real_part = re;
      rep.argmin_angle = t;
    }
  }
  return rep;
}

double companion_order(cplx L) {
  const double q = (L * (L + 1.0)).real();
  const double disc = 1.0 + 4.0 * q;
  if (disc < 0.0) throw Error(ErrorKind::GateViolation, "requires Re[L(L+1)] >= -1/4");
  return 0.5 * (-1.0 + std::sqrt(disc));
}

double companion_radius(Family family, cplx L, double eta, const SeriesOptions& opts) {
  const double l = companion_order(L);
  if (family == Family::F_POWER) return radii::radius_f(l, eta, 0.0, opts).value;
  if (family != Family::F_SHIFT) throw std::invalid_argument("companion_radius: only the Coulomb families apply");
  if (!(eta <= 0.0)) throw Error(ErrorKind::GateViolation, "requires eta <= 0");
  // r F_l' - Re(L) F_l divided by C r^l is (l + 1 - Re L) u + r u'.
  const double a = l + 1.0 - L.real();
  if (!(a > 0.0)) throw Error(ErrorKind::GateViolation, "requires l + 1 > Re L");
  auto fn = [&](double r) {
    const ScaledSeries s = specfun::eval_u_scaled({cplx(l, 0.0), eta}, cplx(r, 0.0), opts);
    const double v = a * s.v.real() + s.zd1.real();
    return radii::Sample{v, std::abs(a * s.v.real()) + std::abs(s.zd1.real())};
  };
  return radii::smallest_positive_root(fn, radii::ScanOptions{}).value;
}

double sharp_spirallike_radius(Family family, cplx L, double eta, double theta, double lower, int grid_size,
                               const SeriesOptions& opts) {
  auto positive = [&](double r) {
    try {
      return spirallike_scan(family, L, eta, r, theta, grid_size, opts).min_real_part > 0.0;
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::PoleOnCircle || e.kind() == ErrorKind::GateViolation) return false;
      throw;
    }
  };
  if (!(lower > 0.0) || !positive(lower))
    throw std::invalid_argument("sharp_spirallike_radius: the scan at `lower` is not positive");
  double lo = lower, hi = lower;
  for (int i = 0;; ++i) {
    hi *= 1.05;
    if (!positive(hi)) break;
    lo = hi;
    if (i > 400) throw Error(ErrorKind::NoRootInScanRange, "sharp_spirallike_radius: no sign change found");
  }
  while (hi - lo > 1e-12 * hi) {
    const double mid = 0.5 * (lo + hi);
    (positive(mid) ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

std::vector<cplx> boundary_image(Family family, const FamilyParams& p, double r, int n_points,
                                 const SeriesOptions& opts) {
  if (!(r > 0.0)) throw std::invalid_argument("boundary_image: r must be positive");
  if (n_points < 2) throw std::invalid_argument("boundary_image: need at least two points");
  check_no_real_zero(family, p, r, opts);

  const cplx expo = exponent_of(family, p);
  auto log_base = [&](cplx z) {
    const ScaledSeries s = base_series(family, p, z, opts);
    if (std::abs(s.v) < 1e-13 * (std::abs(s.v) + std::abs(s.zd1)))
      throw Error(ErrorKind::PoleOnCircle, "normalised function vanishes on the circle");
    return cplx(std::log(std::abs(s.v)) + static_cast<double>(s.exp2) * std::numbers::ln2, std::arg(s.v));
  };

  // Continue arg(base) from z = 0 along a path, subdividing whenever the
  // principal argument jumps by more than half a radian between samples.
  double phase = 0.0;
  std::function<cplx(cplx, cplx, int)> advance = [&](cplx from, cplx to, int depth) -> cplx {
    cplx lb = log_base(to);
    const double step = wrap(lb.imag() - phase);
    if (std::abs(step) > 0.5 && depth < 30) {
      advance(from, 0.5 * (from + to), depth + 1);
      return advance(0.5 * (from + to), to, depth + 1);
    }
    phase += step;
    return cplx(lb.real(), phase);
  };
  auto advance_arc = [&](double t0, double t1) {
    // walk the circle in small angular steps so the chord test above is meaningful
    const int m = std::max(1, static_cast<int>(std::ceil((t1 - t0) / 0.05)));
    cplx lb;
    for (int i = 1; i <= m; ++i) {
      const double ta = t0 + (t1 - t0) * (i - 1) / m, tb = t0 + (t1 - t0) * i / m;
      lb = advance(std::polar(r, ta), std::polar(r, tb), 0);
    }
    return lb;
  };

  constexpr int kRaySteps = 64;
  cplx lb;
  for (int i = 1; i <= kRaySteps; ++i) lb = advance(r * (i - 1) / kRaySteps, r * i / kRaySteps, 0);

  std::vector<cplx> out;
  out.reserve(static_cast<std::size_t>(n_points));
  double t_prev = 0.0;
  for (int j = 0; j < n_points; ++j) {
    const double t = 2.0 * kPi * j / (n_points - 1);
    if (j > 0) lb = advance_arc(t_prev, t);
    t_prev = t;
    const cplx z = std::polar(r, t);
    if (family == Family::F_SHIFT) {
      out.push_back(z * std::exp(lb));
    } else {
      out.push_back(z * std::exp(lb / expo));
    }
  }
  return out;
}

namespace {

std::vector<double> find_zeros(double L, double e, ZeroSet which, int n, const SeriesOptions& opts) {
  double r_max = kPi * (n + 2) + std::abs(e) * (std::log(2.0 * kPi * (n + 2)) + 2.0) + L + 20.0;
  for (int attempt = 0; attempt < 5; ++attempt, r_max *= 1.3) {
    const RealAxisSolution sol(L, e, r_max, opts);
    auto value = [&](double r) {
      const auto pt = sol.at(r);
      return which == ZeroSet::F ? pt.u : (L + 1.0) * pt.u + r * pt.du;
    };
    std::vector<double> zeros;
    constexpr double kStep = 0.1;
    double a = 1e-3, fa = value(a);
    while (static_cast<int>(zeros.size()) < n && a < r_max) {
      const double b = std::min(a + kStep, r_max);
      const double fb = value(b);
      if ((fa > 0.0) != (fb > 0.0)) {
        double lo = a, hi = b, flo = fa;
        for (int it = 0; it < 80 && hi - lo > 1e-14 * hi; ++it) {
          const double mid = 0.5 * (lo + hi);
          const double fm = value(mid);
          if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
          } else {
            hi = mid;
          }
        }
        zeros.push_back(0.5 * (lo + hi));
      }
      a = b;
      fa = fb;
    }
    if (static_cast<int>(zeros.size()) < n) continue;

    for (std::size_t i = 1; i + 1 < zeros.size(); ++i) {
      const double d = zeros[i] - zeros[i - 1];
      const double next = zeros[i + 1] - zeros[i];
      const double prev = i >= 2 ? zeros[i - 1] - zeros[i - 2] : next;
      if (d > 1.6 * std::max(prev, next))
        throw Error(ErrorKind::ZeroEnumerationIncomplete,
                    "zero spacing jumps near r = " + std::to_string(zeros[i]) + "; a zero was probably missed");
    }
    return zeros;
  }
  throw Error(ErrorKind::ZeroEnumerationIncomplete,
              "found fewer than " + std::to_string(n) + " zeros below r = " + std::to_string(r_max));
}

double tail_estimate(double rho_n, double e, int k) {
  // zeros of the Coulomb phase rho - e log(2 rho) + const = n pi have
  // density (1 - e/rho)/pi; integrate from half a spacing past the last one
  const double rho = rho_n + kPi / (2.0 * (1.0 - e / rho_n));
  return (std::pow(rho, 1.0 - k) / (k - 1) - e * std::pow(rho, -k) / k) / kPi;
}

}  // namespace

ZeroSumResult zero_sum_oracle(double L, double eta, ZeroSet which, int k, int n_zeros, bool tail,
                              const SeriesOptions& opts) {
  if (!(eta <= 0.0)) throw Error(ErrorKind::GateViolation, "requires eta <= 0");
  if (!(L > -1.0)) throw Error(ErrorKind::GateViolation, "requires L > -1");
  if (k < 2 || k % 2 != 0) throw Error(ErrorKind::GateViolation, "zero_sum_oracle requires an even power k >= 2");
  if (n_zeros < 1 || n_zeros > 500) throw Error(ErrorKind::GateViolation, "zero_sum_oracle requires 1 <= n_zeros <= 500");

  ZeroSumResult out;
  // g_{L,eta}(-x) = -g_{L,-eta}(x): the negative axis is the positive axis with eta -> -eta.
  out.positive_zeros = find_zeros(L, eta, which, n_zeros, opts);
  out.negative_zeros = find_zeros(L, -eta, which, n_zeros, opts);
  const double neg_sign = k % 2 == 0 ? 1.0 : -1.0;

  double sum = 0.0;
  for (auto it = out.positive_zeros.rbegin(); it != out.positive_zeros.rend(); ++it) sum += std::pow(*it, -k);
  for (auto it = out.negative_zeros.rbegin(); it != out.negative_zeros.rend(); ++it)
    sum += neg_sign * std::pow(*it, -k);
  out.tail = tail_estimate(out.positive_zeros.back(), eta, k) + neg_sign * tail_estimate(out.negative_zeros.back(), -eta, k);
  out.value = tail ? sum + out.tail : sum;
  return out;
}

exact::Rational dini_rayleigh_oracle(const exact::Rational& nu, const exact::Rational& H) {
  if (!(nu > exact::Rational(-1))) throw Error(ErrorKind::GateViolation, "requires nu > -1");
  if (!(nu + H > exact::Rational(0))) throw Error(ErrorKind::GateViolation, "requires nu + H > 0");
  // z^2 coefficient of the Weierstrass product of (z J_nu' + H J_nu) / z^nu
  return (nu + exact::Rational(2) + H) / (exact::Rational(4) * (nu + exact::Rational(1)) * (nu + H));
}

}  // namespace coulomb::verify
