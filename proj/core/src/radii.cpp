#include "coulomb/radii.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "coulomb/error.hpp"
#include "coulomb/rayleigh.hpp"

namespace coulomb::radii {

const char* to_string(Family f) {
  switch (f) {
    case Family::F_POWER: return "f";
    case Family::F_SHIFT: return "g";
    case Family::BESSEL_GEN: return "phi";
  }
  return "?";
}

namespace {

double rel(const Sample& s) { return s.scale > 0.0 ? s.value / s.scale : s.value; }

struct Point {
  double r;
  Sample s;
};

// Golden-section minimum of rel(fn) on [a, b].
Point golden_min(const std::function<Sample(double)>& fn, double a, double b, int& evals) {
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - g * (b - a), d = a + g * (b - a);
  Sample fc = fn(c), fd = fn(d);
  evals += 2;
  while (b - a > 1e-13 * (1.0 + std::abs(a))) {
    if (rel(fc) < rel(fd)) {
      b = d;
      d = c;
      fd = fc;
      c = b - g * (b - a);
      fc = fn(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + g * (b - a);
      fd = fn(d);
    }
    ++evals;
    if (rel(fc) <= 0.0) return {c, fc};
    if (rel(fd) <= 0.0) return {d, fd};
  }
  return rel(fc) < rel(fd) ? Point{c, fc} : Point{d, fd};
}

RadiusResult refine(const std::function<Sample(double)>& fn, Point lo, Point hi, double tol, int evals) {
  RadiusResult out;
  while (hi.r - lo.r > tol * (1.0 + lo.r)) {
    const double mid = 0.5 * (lo.r + hi.r);
    if (mid <= lo.r || mid >= hi.r) break;
    const Point m{mid, fn(mid)};
    ++evals;
    if (rel(m.s) > 0.0) {
      lo = m;
    } else if (rel(m.s) < 0.0) {
      hi = m;
    } else {
      out.value = mid;
      out.lo = lo.r;
      out.hi = hi.r;
      out.residual = 0.0;
      out.iterations = evals;
      return out;
    }
    if (evals > 10000) throw Error(ErrorKind::NonConvergence, "root refinement did not terminate");
  }
  const double flo = rel(lo.s), fhi = rel(hi.s);
  double x = hi.r - fhi * (hi.r - lo.r) / (fhi - flo);
  if (!(x >= lo.r && x <= hi.r))
    throw Error(ErrorKind::NonMonotoneBracket, "secant step left the bracket [" + std::to_string(lo.r) + ", " +
                                                   std::to_string(hi.r) + "]");
  const Sample fx = fn(x);
  ++evals;
  out.value = x;
  out.lo = lo.r;
  out.hi = hi.r;
  out.residual = rel(fx);
  out.iterations = evals;
  return out;
}

}  // namespace

RadiusResult smallest_positive_root(const std::function<Sample(double)>& fn, const ScanOptions& opts) {
  if (!(opts.step > 0.0) || !(opts.ceiling > opts.start) || !(opts.tol >= 1e-15))
    throw std::invalid_argument("smallest_positive_root: bad scan options");

  int evals = 0;
  double h = opts.step;
  Point prev{opts.start, Sample{1.0, 1.0}};
  if (opts.start > 0.0) {
    prev.s = fn(opts.start);
    ++evals;
    if (!(rel(prev.s) > 0.0))
      throw Error(ErrorKind::NoRootInScanRange, "root function is not positive at the scan start");
  }
  Point before = prev;  // sample preceding prev, for the local-minimum test
  bool have_before = false;

  while (prev.r < opts.ceiling) {
    const double r = std::min(prev.r + h, opts.ceiling);
    const Point cur{r, fn(r)};
    ++evals;
    const double fc = rel(cur.s);
    if (fc <= 0.0) {
      if (fc == 0.0) {
        RadiusResult out{r, prev.r, r, 0.0, evals, false, false};
        out.small_root = r < 10.0 * opts.step + opts.start;
        return out;
      }
      RadiusResult out = refine(fn, prev, cur, opts.tol, evals);
      out.small_root = out.value < 10.0 * opts.step + opts.start;
      // Tangential crossing: the slope at the root is negligible next to the
      // change over one scan step, so a second root sits right beside it.
      const double d = 1e-7 * (1.0 + out.value);
      const double slope = (rel(fn(out.value + d)) - rel(fn(out.value - d))) / (2.0 * d);
      out.iterations += 2;
      if (std::abs(slope) * (cur.r - prev.r) < 1e-6 * std::max(rel(prev.s), -fc)) {
        out.double_root = true;
        out.lo = prev.r;
        out.hi = cur.r;
      }
      return out;
    }
    // A positive dip that nearly touches zero may hide a double root or a
    // pair of close roots between grid points.
    if (have_before && rel(prev.s) < rel(before.s) && rel(prev.s) < fc && rel(prev.s) < 1e-3) {
      const Point m = golden_min(fn, before.r, cur.r, evals);
      const double fm = rel(m.s);
      if (fm < 0.0) {
        // The sign change only showed up under the minimum search, so the
        // two roots are nearly coincident; report the whole dip as bracket.
        RadiusResult out = refine(fn, m.r > prev.r ? prev : before, m, opts.tol, evals);
        out.double_root = true;
        out.lo = before.r;
        out.hi = cur.r;
        out.small_root = out.value < 10.0 * opts.step + opts.start;
        return out;
      }
      if (fm <= 1e-10) {
        RadiusResult out{m.r, before.r, cur.r, fm, evals, true, false};
        out.small_root = m.r < 10.0 * opts.step + opts.start;
        return out;
      }
    }
    before = prev;
    have_before = true;
    prev = cur;
    if (prev.r > 10.0) h = std::min(h * 1.1, std::max(opts.step, 0.25));
  }
  throw Error(ErrorKind::NoRootInScanRange,
              "no sign change below the scan ceiling " + std::to_string(opts.ceiling));
}

namespace {

void check_beta(double beta) {
  if (!(beta >= 0.0 && beta < 1.0)) throw Error(ErrorKind::GateViolation, "requires 0 <= beta < 1");
}

void check_coulomb(double L, double eta) {
  if (!(L > -1.0)) throw Error(ErrorKind::GateViolation, "requires L > -1");
  if (!(eta <= 0.0)) throw Error(ErrorKind::GateViolation, "requires eta <= 0");
}

Sample combine(double a, const ScaledSeries& s) {
  const double v = a * s.v.real() + s.zd1.real();
  return {v, std::abs(a * s.v.real()) + std::abs(s.zd1.real())};
}

}  // namespace

// Dividing r g' + c g by C r^L leaves A u + r u' with g = r u, which keeps
// the scaled mantissas meaningful for any order.
Sample reduced_f(double L, double eta, double beta, double r, const SeriesOptions& opts) {
  return combine((1.0 - beta) * (L + 1.0), specfun::eval_u_scaled({cplx(L, 0.0), eta}, cplx(r, 0.0), opts));
}

Sample reduced_g(double L, double eta, double beta, double r, const SeriesOptions& opts) {
  return combine(1.0 - beta, specfun::eval_u_scaled({cplx(L, 0.0), eta}, cplx(r, 0.0), opts));
}

Sample reduced_phi(double nu, double alpha, double beta, double r, const SeriesOptions& opts) {
  return combine((nu + alpha) * (1.0 - beta), specfun::eval_psi_scaled(nu, cplx(r, 0.0), opts));
}

RadiusResult radius_f(double L, double eta, double beta, const SeriesOptions& sopts) {
  check_coulomb(L, eta);
  check_beta(beta);
  ScanOptions scan;
  // For beta = 0 the root is the first zero of F', which the Euler-Rayleigh
  // inequalities bracket; scanning from the lower bound saves most of the work
  // at large L.
  if (beta == 0.0 && L > 0.0) {
    try {
      const auto b = rayleigh::euler_rayleigh_bounds(L, eta, 4);
      const double lo = std::sqrt(b.lower);
      scan.start = lo * (1.0 - 1e-8);
      scan.step = std::min(0.05 * lo, 0.1);
      scan.ceiling = std::sqrt(b.upper) + 10.0;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::BoundsInvalid) throw;
    }
  }
  auto fn = [&](double r) { return reduced_f(L, eta, beta, r, sopts); };
  try {
    return smallest_positive_root(fn, scan);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NoRootInScanRange || scan.start == 0.0) throw;
    return smallest_positive_root(fn, ScanOptions{});
  }
}

RadiusResult radius_g(double L, double eta, double beta, const SeriesOptions& sopts) {
  check_coulomb(L, eta);
  check_beta(beta);
  return smallest_positive_root([&](double r) { return reduced_g(L, eta, beta, r, sopts); }, ScanOptions{});
}

RadiusResult radius_phi(double nu, double alpha, double beta, const SeriesOptions& sopts) {
  if (!(nu > 0.0)) throw Error(ErrorKind::GateViolation, "requires nu > 0");
  if (!(nu + alpha > 0.0)) throw Error(ErrorKind::GateViolation, "requires nu + alpha > 0");
  check_beta(beta);
  return smallest_positive_root([&](double r) { return reduced_phi(nu, alpha, beta, r, sopts); }, ScanOptions{});
}

}  // namespace coulomb::radii
