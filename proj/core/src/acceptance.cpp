#include "coulomb/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <sstream>

#include "coulomb/asympt.hpp"
#include "coulomb/error.hpp"
#include "coulomb/exact.hpp"
#include "coulomb/radii.hpp"
#include "coulomb/rayleigh.hpp"
#include "coulomb/specfun.hpp"
#include "coulomb/verify.hpp"

namespace coulomb::acceptance {

using exact::EtaPolynomial;
using exact::EtaPolynomialSqrt2;
using exact::QSqrt2;
using exact::Rational;

namespace {

std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string sci(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

double library_radius(const std::vector<std::string>& args) {
  std::string family;
  double a = 0, b = 0, beta = 0;
  for (std::size_t i = 0; i + 1 < args.size(); i += 2) {
    const std::string& k = args[i];
    const double v = k == "--family" ? 0.0 : std::stod(args[i + 1]);
    if (k == "--family") family = args[i + 1];
    else if (k == "--L" || k == "--nu") a = v;
    else if (k == "--eta" || k == "--alpha") b = v;
    else if (k == "--beta") beta = v;
  }
  if (family == "f") return radii::radius_f(a, b, beta).value;
  if (family == "g") return radii::radius_g(a, b, beta).value;
  return radii::radius_phi(a, b, beta).value;
}

struct Outcome {
  bool passed;
  std::string detail;
};

Outcome figure_value(const Options& opts, const std::vector<std::string>& args, double expected, double tol,
                     double& seconds) {
  const auto t0 = std::chrono::steady_clock::now();
  const double v = opts.radius_runner ? opts.radius_runner(args) : library_radius(args);
  seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const double err = std::abs(v - expected);
  const bool ok = err <= tol && seconds < 1.0;
  return {ok, "value=" + num(v) + " |err|=" + sci(err) + " tol=" + sci(tol) + " runtime<1s:" +
                  (seconds < 1.0 ? "yes" : "no")};
}

Outcome bessel_reduction() {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> mod(0.0, 10.0), ang(-std::numbers::pi, std::numbers::pi);
  std::vector<cplx> zs;
  for (int i = 0; i < 20; ++i) {
    double m = mod(rng);
    if (m == 0.0) m = 1e-3;
    zs.push_back(std::polar(m, ang(rng)));
  }
  double worst = 0.0;
  std::string where;
  for (double l : {0.0, 1.0, 3.7}) {
    for (cplx z : zs) {
      const cplx F = specfun::eval_F({cplx(l - 0.5, 0.0), 0.0}, z);
      const cplx J = specfun::eval_bessel_j(l, z).value;
      const double d = std::abs(F - std::sqrt(std::numbers::pi * z / 2.0) * J) / (1.0 + std::abs(F));
      if (d > worst) {
        worst = d;
        where = "l=" + num(l) + " z=" + num(z.real()) + (z.imag() < 0 ? "" : "+") + num(z.imag()) + "i";
      }
    }
  }
  return {worst <= 1e-12, "max rel diff=" + sci(worst) + " at " + where + " tol=1e-12"};
}

Outcome zero_sums() {
  bool ok = true;
  std::ostringstream d;
  const std::pair<int, int> pts[] = {{2, 0}, {2, -1}, {5, -1}};
  for (auto [L, eta] : pts) {
    const double rec = rayleigh::rayleigh_Z(Rational(L), Rational(eta), 2).at(2).to_double();
    const double zs = verify::zero_sum_oracle(L, eta, verify::ZeroSet::F, 2, 200, true).value;
    const double err = std::abs(rec - zs);
    ok = ok && err <= 1e-6;
    d << "Z(" << L << "," << eta << ") diff=" << sci(err) << "; ";
  }
  const Rational zt = rayleigh::rayleigh_Ztilde(Rational(1, 2), Rational(0), 2).at(2);
  const double zs = verify::zero_sum_oracle(0.5, 0.0, verify::ZeroSet::dF, 2, 200, true).value;
  const bool exact_ok = zt == Rational(7, 12);
  const double err = std::abs(zs - 7.0 / 12.0);
  ok = ok && exact_ok && err <= 1e-6;
  d << "Ztilde(1/2,0)=" << zt.str() << " zero-sum diff from 7/12=" << sci(err);
  return {ok, d.str()};
}

Outcome euler_rayleigh() {
  int points = 0, monotone = 0;
  bool contained = true;
  std::string first_failure;
  for (double L : {1.0, 2.0, 5.0, 10.0}) {
    for (double eta : {-0.5, -1.0, -2.0}) {
      ++points;
      const double r = radii::radius_f(L, eta, 0.0).value;
      const double r2 = r * r;
      double prev_width = INFINITY;
      bool mono = true;
      for (int s = 1; s <= 4; ++s) {
        const auto b = rayleigh::euler_rayleigh_bounds(Rational::from_double(L), Rational::from_double(eta), s);
        if (!(b.lower < r2 && r2 < b.upper)) {
          contained = false;
          if (first_failure.empty())
            first_failure = " first miss: L=" + num(L) + " eta=" + num(eta) + " s=" + std::to_string(s);
        }
        const double w = b.upper - b.lower;
        if (w > prev_width) mono = false;
        prev_width = w;
      }
      monotone += mono;
    }
  }
  const double frac = static_cast<double>(monotone) / points;
  return {contained && frac >= 0.9, std::string("containment ") + (contained ? "holds" : "FAILS") + " on " +
                                        std::to_string(points) + " points; width non-increasing on " +
                                        std::to_string(monotone) + "/" + std::to_string(points) + first_failure};
}

Outcome zeta_exactness() {
  const auto z = rayleigh::zeta_coeffs(2, 2);
  const EtaPolynomial eta = EtaPolynomial::variable();
  const bool c0 = z[0] == EtaPolynomial(Rational(1, 2));
  const bool c1 = z[1] == EtaPolynomial(Rational(-3, 4));
  const bool c2 = z[2] == EtaPolynomial(Rational(9, 8)) + EtaPolynomial(Rational(1, 2)) * eta * eta;
  const auto lv = rayleigh::zeta_laurent_eval(2, 100.0, 0.0, 3);
  const double err = std::abs(lv.value - 1.0 / 203.0);
  const bool lau = err <= 5e-9;
  return {c0 && c1 && c2 && lau, std::string("zeta_0=") + z[0].str() + " zeta_1=" + z[1].str() + " zeta_2=" +
                                     z[2].str() + " exact:" + (c0 && c1 && c2 ? "yes" : "no") +
                                     "; 3-term Laurent at L=100 |err|=" + sci(err) + " tol=5e-9"};
}

Outcome epsilon_exactness() {
  const auto t = asympt::epsilon_coeffs(2);
  const EtaPolynomialSqrt2 eta = EtaPolynomialSqrt2::variable();
  const QSqrt2 s2 = QSqrt2::sqrt2();
  const EtaPolynomialSqrt2 expected =
      EtaPolynomialSqrt2(s2) * eta + EtaPolynomialSqrt2(QSqrt2(Rational(0), Rational(1, 4))) +
      EtaPolynomialSqrt2(QSqrt2(Rational(-1, 2)));
  const bool eps_ok = t.at(1) == expected;
  const auto res = asympt::annihilation_residuals(t, 2);
  const bool ann_ok = exact::is_zero(res[0]) && exact::is_zero(res[1]);
  std::string d = "eps_1=" + t.at(1).str(exact::TermOrder::Descending) + " expected " +
                  expected.str(exact::TermOrder::Descending) + " match:" + (eps_ok ? "yes" : "no") +
                  "; annihilation x^0,x^1: " + res[0].str() + ", " + res[1].str() + " (x^2: " + res[2].str() + ")";
  return {eps_ok && ann_ok, d};
}

Outcome order_law() {
  const std::vector<double> grid{25, 50, 100, 200};
  const double eta = -1.0;
  std::vector<double> direct;
  for (double L : grid) direct.push_back(radii::radius_f(L, eta, 0.0).value);
  const auto table = asympt::epsilon_coeffs(2);
  bool ok = true;
  std::ostringstream d;
  for (int N = 0; N <= 2; ++N) {
    try {
      const auto fit = asympt::empirical_order(grid, direct, eta, N, table);
      const double target = -(N + 1.0);
      const bool in = std::abs(fit.slope - target) <= 0.5;
      ok = ok && in;
      d << "N=" << N << " slope=" << num(fit.slope).substr(0, 7) << " (want " << target << "+-0.5) ";
    } catch (const Error& e) {
      ok = false;
      d << "N=" << N << " " << e.what() << " ";
    }
  }
  d << "r*/L at L=200: " << num(direct.back() / 200.0).substr(0, 8);
  return {ok, d.str()};
}

Outcome disk_scans() {
  using verify::Family;
  using verify::FamilyParams;
  struct Point {
    const char* label;
    Family family;
    FamilyParams p;
    double radius;
  };
  std::vector<Point> pts{
      {"f L=-1/2 eta=0", Family::F_POWER, FamilyParams::coulomb(-0.5, 0.0), radii::radius_f(-0.5, 0.0, 0.0).value},
      {"g L=0 eta=0", Family::F_SHIFT, FamilyParams::coulomb(0.0, 0.0), radii::radius_g(0.0, 0.0, 0.0).value},
      {"f L=2 eta=-1", Family::F_POWER, FamilyParams::coulomb(2.0, -1.0), radii::radius_f(2.0, -1.0, 0.0).value},
      {"g L=1 eta=-0.5", Family::F_SHIFT, FamilyParams::coulomb(1.0, -0.5), radii::radius_g(1.0, -0.5, 0.0).value},
      {"phi nu=1 alpha=0", Family::BESSEL_GEN, FamilyParams::bessel(1.0, 0.0), radii::radius_phi(1.0, 0.0, 0.0).value},
  };
  bool ok = true;
  std::ostringstream d;
  for (const auto& pt : pts) {
    const double in = verify::starlike_scan(pt.family, pt.p, 0.99 * pt.radius, 1024).min_real_part;
    const double out = verify::starlike_scan(pt.family, pt.p, 1.01 * pt.radius, 1024).min_real_part;
    const bool good = in > 0.0 && out < 0.0;
    ok = ok && good;
    d << pt.label << ": " << sci(in) << "/" << sci(out) << (good ? "" : " FAIL") << "; ";
  }
  // Complex order: spirallike with theta = arg(L+1); the sharp radius comes from
  // the scan itself, the companion-order radius is a guaranteed lower witness.
  const cplx L(0.2, 0.1);
  const double eta = -0.5, theta = std::arg(L + 1.0);
  const double comp = verify::companion_radius(Family::F_POWER, L, eta);
  const double sharp = verify::sharp_spirallike_radius(Family::F_POWER, L, eta, theta, 0.5 * comp, 1024);
  const double in = verify::spirallike_scan(Family::F_POWER, L, eta, 0.99 * sharp, theta, 1024).min_real_part;
  const double out = verify::spirallike_scan(Family::F_POWER, L, eta, 1.01 * sharp, theta, 1024).min_real_part;
  const double below = verify::spirallike_scan(Family::F_POWER, L, eta, 0.99 * comp, theta, 1024).min_real_part;
  const bool good = in > 0.0 && out < 0.0 && below > 0.0;
  ok = ok && good;
  d << "f L=0.2+0.1i eta=-0.5 spiral r=" << num(sharp).substr(0, 10) << ": " << sci(in) << "/" << sci(out)
    << " (companion radius " << num(comp).substr(0, 10) << " scan " << sci(below) << ")" << (good ? "" : " FAIL");
  return {ok, d.str()};
}

Outcome potential_polys() {
  bool ok = true;
  const std::vector<Rational> ones{Rational(1), Rational(0), Rational(0), Rational(0), Rational(0), Rational(0)};
  const auto A = exact::potential_polynomials(3, ones, 6);
  const long binom[] = {1, 3, 3, 1, 0, 0, 0};
  for (int k = 0; k <= 6; ++k) ok = ok && A[k] == Rational(binom[k]);

  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> numd(-50, 50), dend(1, 40);
  int good = 0;
  for (int i = 0; i < 20; ++i) {
    const Rational a1(numd(rng), dend(rng)), a2(numd(rng), dend(rng));
    const auto B = exact::potential_polynomials(2, std::vector<Rational>{a1, a2}, 2);
    good += B[2] == Rational(2) * a2 + a1 * a1;
  }
  ok = ok && good == 20;
  return {ok, "A_{3,0..6} over (1,0,...)=" + std::string(ok ? "binomial" : "mismatch") +
                  "; A_{2,2}=2a2+a1^2 on " + std::to_string(good) + "/20 random rationals"};
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const Options& opts) {
  struct Entry {
    int id;
    const char* name;
    std::function<Outcome(double&)> run;
  };
  const std::vector<Entry> entries{
      {1, "figure-1 radius",
       [&](double& s) {
         return figure_value(opts, {"--family", "f", "--L", "-0.5", "--eta", "0", "--beta", "0"},
                             0.9407705639497375, 1e-10, s);
       }},
      {2, "figure-2 radius",
       [&](double& s) {
         return figure_value(opts, {"--family", "g", "--L", "0", "--eta", "0", "--beta", "0"},
                             1.5707963267948968, 1e-12, s);
       }},
      {3, "bessel reduction identity", [](double&) { return bessel_reduction(); }},
      {4, "rayleigh sums vs zero sums", [](double&) { return zero_sums(); }},
      {5, "euler-rayleigh sandwich", [](double&) { return euler_rayleigh(); }},
      {6, "zeta coefficient exactness", [](double&) { return zeta_exactness(); }},
      {7, "epsilon exactness", [](double&) { return epsilon_exactness(); }},
      {8, "asymptotic order law", [](double&) { return order_law(); }},
      {9, "disk-scan witnesses", [](double&) { return disk_scans(); }},
      {10, "potential polynomials", [](double&) { return potential_polys(); }},
  };
  const double budget[] = {0, 1.0, 1.0, 0, 30.0, 0, 0, 0, 60.0, 0, 0};

  std::vector<CriterionResult> out;
  for (const auto& e : entries) {
    if (!opts.only.empty() && std::find(opts.only.begin(), opts.only.end(), e.id) == opts.only.end()) continue;
    CriterionResult r;
    r.id = e.id;
    r.name = e.name;
    const auto t0 = std::chrono::steady_clock::now();
    double inner = -1.0;
    try {
      const Outcome o = e.run(inner);
      r.passed = o.passed;
      r.detail = o.detail;
    } catch (const std::exception& ex) {
      r.passed = false;
      r.detail = std::string("exception: ") + ex.what();
    }
    r.seconds = inner >= 0.0 ? inner : std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (budget[e.id] > 0.0 && r.seconds >= budget[e.id]) {
      r.passed = false;
      r.detail += "; over the " + num(budget[e.id]) + " s budget";
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::string format_line(const CriterionResult& r) {
  char head[96];
  std::snprintf(head, sizeof head, "%s %2d  %-28s", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str());
  char tail[48];
  std::snprintf(tail, sizeof tail, "  (%.2f s)", r.seconds);
  return std::string(head) + r.detail + tail;
}

}  // namespace coulomb::acceptance
