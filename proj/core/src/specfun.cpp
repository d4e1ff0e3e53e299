#include "coulomb/specfun.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/float128.hpp>

#include <cmath>
#include <limits>
#include <string>

#include "coulomb/error.hpp"
#include "cx.hpp"

namespace coulomb::specfun {

namespace {

namespace mp = boost::multiprecision;
using detail::cx;
using detail::modulus;
using detail::to_cplx;

using f128 = mp::float128;
using b50 = mp::number<mp::cpp_bin_float<50>, mp::et_off>;
using b100 = mp::number<mp::cpp_bin_float<100>, mp::et_off>;
using b250 = mp::number<mp::cpp_bin_float<250>, mp::et_off>;

enum class Kind { Coulomb, Psi };

// Neumaier-compensated accumulator.
template <class R>
struct Acc {
  R sum{}, comp{};
  void add(const R& x) {
    using std::abs;
    const R t = sum + x;
    if (abs(sum) >= abs(x)) comp += (sum - t) + x;
    else comp += (x - t) + sum;
    sum = t;
  }
  R value() const { return sum + comp; }
};

template <class R>
struct Acc<cx<R>> {
  Acc<R> re, im;
  void add(const cx<R>& x) { re.add(x.re); im.add(x.im); }
  cx<R> value() const { return {re.value(), im.value()}; }
};

template <class R>
bool finite(const R& x) {
  using std::isfinite;
  using boost::multiprecision::isfinite;
  return isfinite(x);
}

struct Attempt {
  bool ok = false;
  bool exhausted = false;
  ScaledSeries out;
};

template <class R>
cx<R> scale_down(const cx<R>& z, int e) {
  using std::ldexp;
  return {ldexp(z.re, -e), ldexp(z.im, -e)};
}
template <class R>
R scale_down(const R& x, int e) {
  using std::ldexp;
  return ldexp(x, -e);
}

// Sums v = sum t_n, z v' and z^2 v'' for the two term recurrences used here.
// par is L (Coulomb) or nu (Psi).
template <class R, class S>
Attempt run(Kind kind, const S& par, const R& eta, const S& z, double tol_d, int max_terms) {
  using std::abs;
  using std::sqrt;
  const R tol(tol_d);
  const R one(1), two(2), half(0.5);
  const S z2 = z * z;
  const R az = modulus(z);

  Acc<S> s0, s1, s2;
  R a0(1), a1(0), a2(0);
  S tm2{}, tm1 = S(one);
  s0.add(tm1);
  int quiet = 0;
  Attempt res;

  for (int n = 1; n <= max_terms; ++n) {
    S t;
    R p;
    if (kind == Kind::Coulomb) {
      p = R(n);
      if (n == 1) {
        t = (eta * z) * tm1 / (par + S(one));
      } else {
        const S den = S(R(n)) * (par * two + S(R(n + 1)));
        t = (two * eta * z * tm1 - z2 * tm2) / den;
      }
    } else {
      p = R(2 * n);
      const S den = S(R(n)) * (par + S(R(n))) * R(-4);
      t = tm1 * z2 / den;
    }
    const R w1 = p, w2 = p * (p - one);
    s0.add(t);
    s1.add(t * w1);
    s2.add(t * w2);
    const R at = modulus(t);
    if (!finite(at)) return res;  // overflow in this tier
    a0 += at;
    a1 += at * w1;
    a2 += at * w2;

    const R m0 = modulus(s0.value()), m1 = modulus(s1.value()), m2 = modulus(s2.value());
    const R sc = m0 + m1;
    const bool small = at <= tol * (m0 + sc) && at * w1 <= tol * (m1 + sc) && at * w2 <= tol * (m2 + sc);
    quiet = small ? quiet + 1 : 0;

    if (quiet >= 3) {
      R rho, mx, step;
      if (kind == Kind::Coulomb) {
        rho = (two * abs(eta) * az + az * az) / (R(n + 1) * modulus(par * two + S(R(n + 2))));
        mx = std::max(at, modulus(tm1));
        step = one;
      } else {
        rho = az * az / (R(4 * (n + 1)) * modulus(par + S(R(n + 1))));
        mx = at;
        step = two;
      }
      if (rho < half) {
        const R t0 = (kind == Kind::Coulomb ? two : one) * mx * rho / (one - rho);
        const R wt = p + two * step / (one - rho);
        const R t1 = t0 * wt, t2 = t1 * wt;
        if (t0 <= tol * (m0 + sc) && t1 <= tol * (m1 + sc) && t2 <= tol * (m2 + sc)) {
          const R eps = std::numeric_limits<R>::epsilon();
          const R rf = two * eps * sqrt(R(n + 1));
          const R e0 = (t0 + rf * a0) / (m0 + sc);
          const R e1 = (t1 + rf * a1) / (m1 + sc);
          const R e2 = (t2 + rf * a2) / (m2 + sc);
          const R err = std::max(e0, std::max(e1, e2));
          if (!(err <= tol)) return res;  // cancellation too strong for this tier
          const S v0 = s0.value(), v1 = s1.value(), v2 = s2.value();
          const R big = std::max(m0, std::max(m1, m2));
          int e = 0;
          if (big > 0) {
            using std::frexp;
            (void)frexp(big, &e);
          }
          res.ok = true;
          res.out.v = to_cplx(scale_down(v0, e));
          res.out.zd1 = to_cplx(scale_down(v1, e));
          res.out.zzd2 = to_cplx(scale_down(v2, e));
          res.out.exp2 = e;
          res.out.terms_used = n + 1;
          res.out.rel_error = static_cast<double>(e0);
          res.out.digits = std::numeric_limits<R>::digits10;
          return res;
        }
      }
    }
    tm2 = tm1;
    tm1 = t;
  }
  res.exhausted = true;
  return res;
}

template <class R>
Attempt tier(Kind kind, cplx par, double eta, cplx z, double tol, int max_terms) {
  if (par.imag() == 0.0 && z.imag() == 0.0)
    return run<R, R>(kind, R(par.real()), R(eta), R(z.real()), tol, max_terms);
  return run<R, cx<R>>(kind, cx<R>(R(par.real()), R(par.imag())), R(eta), cx<R>(R(z.real()), R(z.imag())), tol,
                       max_terms);
}

ScaledSeries evaluate(Kind kind, cplx par, double eta, cplx z, const SeriesOptions& opts) {
  if (!(opts.tol > 1e-16 && opts.tol < 1e-6))
    throw std::invalid_argument("series tolerance must lie in (1e-16, 1e-6)");
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw std::invalid_argument("series: non-finite argument");
  if (z == cplx(0.0, 0.0)) {
    ScaledSeries s;
    s.v = 1.0;
    s.terms_used = 1;
    return s;
  }
  using TierFn = Attempt (*)(Kind, cplx, double, cplx, double, int);
  static constexpr TierFn tiers[] = {&tier<double>, &tier<f128>, &tier<b50>, &tier<b100>, &tier<b250>};
  for (TierFn fn : tiers) {
    const Attempt a = fn(kind, par, eta, z, opts.tol, opts.max_terms);
    if (a.ok) return a.out;
    if (a.exhausted)
      throw Error(ErrorKind::NonConvergence,
                  "series did not meet the truncation criterion within " + std::to_string(opts.max_terms) + " terms");
  }
  throw Error(ErrorKind::NonConvergence, "series cancellation exceeds the available working precision");
}

cplx ldexp_c(cplx z, long e) {
  return {std::ldexp(z.real(), static_cast<int>(e)), std::ldexp(z.imag(), static_cast<int>(e))};
}

void check_series_order(cplx L) {
  if (L.imag() == 0.0 && L.real() <= -1.0)
    throw Error(ErrorKind::DegenerateOrder, "series requires L > -1 for real L");
}

}  // namespace

std::vector<exact::Rational> coulomb_series_coeffs(const exact::Rational& L, const exact::Rational& eta, int n_max) {
  using exact::Rational;
  if (L <= Rational(-1)) throw Error(ErrorKind::DegenerateOrder, "coulomb_series_coeffs: L must exceed -1");
  if (n_max < 0) return {};
  std::vector<Rational> a;
  a.reserve(static_cast<std::size_t>(n_max) + 1);
  a.emplace_back(1);
  if (n_max >= 1) a.push_back(eta / (L + Rational(1)));
  for (int n = 2; n <= n_max; ++n) {
    const Rational den = Rational(n) * (Rational(n + 1) + Rational(2) * L);
    if (den.is_zero()) throw Error(ErrorKind::DegenerateOrder, "coulomb_series_coeffs: vanishing denominator");
    a.push_back((Rational(2) * eta * a[n - 1] - a[n - 2]) / den);
  }
  return a;
}

std::vector<cplx> coulomb_series_coeffs(const CoulombParams& params, int n_max) {
  check_series_order(params.L);
  if (n_max < 0) return {};
  const cplx L = params.L;
  if (L == cplx(-1.0, 0.0)) throw Error(ErrorKind::DegenerateOrder, "coulomb_series_coeffs: L = -1");
  std::vector<cplx> a;
  a.reserve(static_cast<std::size_t>(n_max) + 1);
  a.emplace_back(1.0);
  if (n_max >= 1) a.push_back(params.eta / (L + 1.0));
  for (int n = 2; n <= n_max; ++n) {
    const cplx den = static_cast<double>(n) * (static_cast<double>(n + 1) + 2.0 * L);
    if (den == cplx(0.0, 0.0)) throw Error(ErrorKind::DegenerateOrder, "coulomb_series_coeffs: vanishing denominator");
    a.push_back((2.0 * params.eta * a[n - 1] - a[n - 2]) / den);
  }
  return a;
}

ScaledSeries eval_u_scaled(const CoulombParams& params, cplx z, const SeriesOptions& opts) {
  check_series_order(params.L);
  if (params.L == cplx(-1.0, 0.0)) throw Error(ErrorKind::DegenerateOrder, "eval_g: L = -1");
  return evaluate(Kind::Coulomb, params.L, params.eta, z, opts);
}

ScaledSeries eval_psi_scaled(double nu, cplx z, const SeriesOptions& opts) {
  if (!(nu > -1.0)) throw Error(ErrorKind::GateViolation, "Bessel series requires nu > -1");
  return evaluate(Kind::Psi, cplx(nu, 0.0), 0.0, z, opts);
}

GTriple eval_g_triple(const CoulombParams& params, cplx z, long& exp2, const SeriesOptions& opts) {
  const ScaledSeries u = eval_u_scaled(params, z, opts);
  exp2 = u.exp2;
  if (z == cplx(0.0, 0.0)) return {0.0, 1.0, 2.0 * params.eta / (params.L + 1.0)};
  return {z * u.v, u.v + u.zd1, (2.0 * u.zd1 + u.zzd2) / z};
}

SeriesEval eval_g(const CoulombParams& params, cplx z, const SeriesOptions& opts) {
  const ScaledSeries u = eval_u_scaled(params, z, opts);
  SeriesEval out;
  out.terms_used = u.terms_used;
  if (z == cplx(0.0, 0.0)) {
    out.value = 0.0;
    out.derivative = 1.0;
    return out;
  }
  out.value = ldexp_c(z * u.v, u.exp2);
  out.derivative = ldexp_c(u.v + u.zd1, u.exp2);
  out.est_error = std::ldexp(u.rel_error * (std::abs(u.v) + std::abs(u.zd1)) * std::abs(z), static_cast<int>(u.exp2));
  return out;
}

SeriesEval eval_F_series(const CoulombParams& params, cplx z, const SeriesOptions& opts) {
  const cplx L = params.L;
  if (!(L.real() > -1.0)) throw Error(ErrorKind::GateViolation, "eval_F requires Re L > -1");
  const cplx logC = log_coulomb_C(params);
  SeriesEval out;
  if (z == cplx(0.0, 0.0)) {
    out.value = 0.0;
    if (L == cplx(0.0, 0.0)) out.derivative = std::exp(logC);
    else if (L.real() > 0.0) out.derivative = 0.0;
    else out.derivative = std::numeric_limits<double>::infinity();
    out.terms_used = 1;
    return out;
  }
  const ScaledSeries u = eval_u_scaled(params, z, opts);
  const cplx g = z * u.v;
  const cplx dg = u.v + u.zd1;
  // principal branch of z^L
  const cplx base = std::exp(logC + L * std::log(z) + static_cast<double>(u.exp2) * std::log(2.0));
  out.value = base * g;
  out.derivative = base * (L * g / z + dg);
  out.terms_used = u.terms_used;
  out.est_error = std::abs(base) * u.rel_error * (std::abs(u.v) + std::abs(u.zd1)) * std::abs(z);
  return out;
}

cplx eval_F(const CoulombParams& params, cplx z, const SeriesOptions& opts) {
  return eval_F_series(params, z, opts).value;
}

SeriesEval eval_bessel_j(double nu, cplx z, const SeriesOptions& opts) {
  if (!(nu > -1.0)) throw Error(ErrorKind::GateViolation, "eval_bessel_j requires nu > -1");
  SeriesEval out;
  out.terms_used = 1;
  if (z == cplx(0.0, 0.0)) {
    const double inf = std::numeric_limits<double>::infinity();
    out.value = nu == 0.0 ? 1.0 : (nu > 0.0 ? 0.0 : inf);
    out.derivative = nu == 1.0 ? 0.5 : (nu > 1.0 || nu == 0.0 ? 0.0 : inf);
    return out;
  }
  const ScaledSeries p = eval_psi_scaled(nu, z, opts);
  const cplx pref = std::exp(nu * std::log(z / 2.0) - log_gamma(cplx(nu + 1.0, 0.0)) +
                             static_cast<double>(p.exp2) * std::log(2.0));
  out.value = pref * p.v;
  out.derivative = pref * (nu * p.v + p.zd1) / z;
  out.terms_used = p.terms_used;
  out.est_error = std::abs(pref) * p.rel_error * (std::abs(p.v) + std::abs(p.zd1));
  return out;
}

double eval_dini(double nu, double H, double r, const SeriesOptions& opts) {
  if (!(r > 0.0)) throw std::invalid_argument("eval_dini requires r > 0");
  const SeriesEval j = eval_bessel_j(nu, cplx(r, 0.0), opts);
  return (r * j.derivative + H * j.value).real();
}

}  // namespace coulomb::specfun
