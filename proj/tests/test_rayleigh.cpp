#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "coulomb/error.hpp"
#include "coulomb/exact.hpp"
#include "coulomb/radii.hpp"
#include "coulomb/rayleigh.hpp"

using coulomb::exact::EtaPolynomial;
using coulomb::exact::Rational;
namespace ry = coulomb::rayleigh;

namespace {

Rational Z2_closed(const Rational& L, const Rational& eta) {
  const Rational L1 = L + Rational(1);
  return (Rational(1) + eta * eta / (L1 * L1)) / (Rational(2) * L + Rational(3));
}

// Sums over the positive zeros of the Dini function z J_nu' + H J_nu, read
// off its power series: D(z)/(leading term) = 1 + b1 w + b2 w^2 + ..., w = z^2.
std::pair<Rational, Rational> dini_power_sums(const Rational& nu, const Rational& H) {
  const Rational b1 = -(nu + Rational(2) + H) / (Rational(4) * (nu + Rational(1)) * (nu + H));
  const Rational b2 = (nu + Rational(4) + H) / (Rational(32) * (nu + Rational(1)) * (nu + Rational(2)) * (nu + H));
  return {-b1, b1 * b1 - Rational(2) * b2};
}

}  // namespace

TEST(RayleighZ, ClosedFormExamples) {
  EXPECT_EQ(ry::rayleigh_Z(Rational(1), Rational(0), 2).at(2), Rational(1, 5));
  EXPECT_EQ(ry::rayleigh_Z(Rational(1, 2), Rational(0), 2).at(2), Rational(1, 4));
  EXPECT_EQ(ry::rayleigh_Z(Rational(2), Rational(-1), 2).at(2), Rational(10, 63));
}

TEST(RayleighZ, SecondSumMatchesClosedForm) {
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<long> n(-9, 40), e(-20, 20), d(1, 10);
  for (int i = 0; i < 40; ++i) {
    const Rational L(n(rng), 10), eta(e(rng), d(rng));
    if (L <= Rational(-1)) continue;
    EXPECT_EQ(ry::rayleigh_Z(L, eta, 2).at(2), Z2_closed(L, eta));
  }
}

TEST(RayleighZ, ThirdSum) {
  const Rational L(3, 4), eta(-5, 3);
  const auto t = ry::rayleigh_Z(L, eta, 3);
  EXPECT_EQ(t.at(3), Rational(2) * eta * t.at(2) / ((Rational(2) * L + Rational(4)) * (L + Rational(1))));
}

TEST(RayleighZ, RecurrenceResubstitution) {
  for (auto [L, eta] : {std::pair{Rational(2), Rational(-1)}, {Rational(-1, 3), Rational(7, 5)}, {Rational(11, 2), Rational(0)}}) {
    const auto t = ry::rayleigh_Z(L, eta, 16);
    for (int k = 2; k < 16; ++k) {
      Rational rhs = Rational(2) * eta / (L + Rational(1)) * t.at(k);
      for (int l = 1; l <= k - 2; ++l) rhs += t.at(l + 1) * t.at(k - l);
      EXPECT_EQ((Rational(2) * L + Rational(k + 2)) * t.at(k + 1), rhs) << "k=" << k;
    }
  }
}

TEST(RayleighZ, OddSumsVanishWithoutCharge) {
  const auto t = ry::rayleigh_Z(Rational(7, 3), Rational(0), 11);
  for (int k = 3; k <= 11; k += 2) EXPECT_TRUE(t.at(k).is_zero()) << k;
}

TEST(RayleighZ, FourthSumIsBesselSum) {
  // zeros at eta = 0 are +-j_{nu,n}, nu = L + 1/2; sum j^{-4} = 1/(16 (nu+1)^2 (nu+2))
  for (Rational L : {Rational(0), Rational(1, 2), Rational(3)}) {
    const Rational nu = L + Rational(1, 2);
    const Rational s4 = Rational(1) / (Rational(16) * (nu + Rational(1)) * (nu + Rational(1)) * (nu + Rational(2)));
    EXPECT_EQ(ry::rayleigh_Z(L, Rational(0), 4).at(4), Rational(2) * s4);
  }
}

TEST(RayleighZ, PositiveSecondSum) {
  for (double L : {-0.9, -0.5, 0.0, 3.0}) EXPECT_GT(ry::rayleigh_Z(L, -2.0, 2).at(2), 0.0);
}

TEST(RayleighZ, EarlyReadIsALogicError) {
  const auto t = ry::rayleigh_Z(Rational(1), Rational(0), 3);
  EXPECT_THROW((void)t.at(1), std::logic_error);
  EXPECT_THROW((void)t.at(4), std::logic_error);
}

TEST(GeneratingCoeffs, MatchClosedForms) {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<long> n(1, 60), e(-30, 30);
  for (int i = 0; i < 25; ++i) {
    const Rational L(n(rng), 7), eta(e(rng), 9);
    const auto a = ry::gen_coeffs_a(L, eta, 2);
    const Rational L1 = L + Rational(1);
    EXPECT_EQ(a[0], Rational(2) * eta / (L * L1));
    EXPECT_EQ(a[1], Rational(-2) * (L * L + L + Rational(2) * eta * eta) / (L * L * L1 * L1));
    EXPECT_EQ(a[2], Rational(2) * eta * (Rational(3) * L * L + Rational(3) * L + Rational(4) * eta * eta) / (L * L * L * L1 * L1 * L1));
  }
}

TEST(GeneratingCoeffs, RejectsZeroOrder) {
  try {
    ry::gen_coeffs_a(Rational(0), Rational(-1), 3);
    FAIL();
  } catch (const coulomb::Error& e) {
    EXPECT_EQ(e.kind(), coulomb::ErrorKind::DegenerateOrder);
  }
}

TEST(RayleighZtilde, Examples) {
  EXPECT_EQ(ry::rayleigh_Ztilde(Rational(1, 2), Rational(0), 2).at(2), Rational(7, 12));
  EXPECT_EQ(ry::rayleigh_Ztilde(Rational(1), Rational(0), 2).at(2), Rational(2, 5));
}

TEST(RayleighZtilde, ChargedSecondSum) {
  const Rational L(2), eta(-1), L1 = L + Rational(1);
  const Rational a0 = Rational(2) * eta / (L * L1);
  const Rational a1 = Rational(-2) * (L * L + L + Rational(2) * eta * eta) / (L * L * L1 * L1);
  const Rational pt = (L + Rational(2)) * eta / (L1 * L1);
  const Rational want = (Rational(1) - L * a1 - pt * a0 + pt * pt) / (Rational(2) * L + Rational(3));
  EXPECT_EQ(ry::rayleigh_Ztilde(L, eta, 2).at(2), want);
}

TEST(RayleighZtilde, UnchargedSumsMatchDiniSeries) {
  // F'_{L,0} vanishes where z J_nu' + J_nu / 2 does, nu = L + 1/2
  for (Rational nu : {Rational(1), Rational(3, 2), Rational(4), Rational(17, 3)}) {
    const auto [s1, s2] = dini_power_sums(nu, Rational(1, 2));
    const auto t = ry::rayleigh_Ztilde(nu - Rational(1, 2), Rational(0), 4);
    EXPECT_EQ(t.at(2), Rational(2) * s1);
    EXPECT_EQ(t.at(4), Rational(2) * s2);
    EXPECT_TRUE(t.at(3).is_zero());
  }
}

TEST(RayleighZtilde, FloatAgreesWithExact) {
  for (auto [L, eta] : {std::pair{0.5, -1.0}, {2.0, -0.5}, {7.25, -2.0}, {0.125, 1.5}}) {
    const auto f = ry::rayleigh_Ztilde(L, eta, 20);
    const auto e = ry::rayleigh_Ztilde(Rational::from_double(L), Rational::from_double(eta), 20);
    for (int k = 2; k <= 20; ++k) {
      const double want = e.at(k).to_double();
      EXPECT_NEAR(f.at(k), want, 1e-13 * std::abs(want)) << "L=" << L << " k=" << k;
    }
  }
}

TEST(RayleighValues, ExactPathBelowFortyTerms) {
  bool exact = false;
  const auto v = ry::rayleigh_values(ry::Which::Z, 1.0, 0.0, 10, &exact);
  EXPECT_TRUE(exact);
  EXPECT_DOUBLE_EQ(v[2], 0.2);
  ry::rayleigh_values(ry::Which::Ztilde, 1.0, -1.0, 41, &exact);
  EXPECT_FALSE(exact);
}

TEST(EulerRayleigh, UnchargedExample) {
  const auto b = ry::euler_rayleigh_bounds(Rational(1, 2), Rational(0), 1);
  EXPECT_DOUBLE_EQ(b.lower, 12.0 / 7.0);
  const double r = coulomb::radii::radius_f(0.5, 0.0, 0.0).value;
  EXPECT_LT(b.lower, r * r);
  EXPECT_LT(r * r, b.upper);
}

TEST(EulerRayleigh, BracketsShrinkAroundTheRoot) {
  for (double L : {0.5, 1.0, 3.0, 8.0}) {
    for (double eta : {-0.25, -1.0, -3.0}) {
      const double r = coulomb::radii::radius_f(L, eta, 0.0).value;
      double prev_lo = 0.0, prev_hi = INFINITY;
      for (int s = 1; s <= 6; ++s) {
        const auto b = ry::euler_rayleigh_bounds(L, eta, s);
        EXPECT_LT(b.lower, r * r) << L << " " << eta << " s=" << s;
        EXPECT_GT(b.upper, r * r) << L << " " << eta << " s=" << s;
        EXPECT_LT(std::max(prev_lo, b.lower), std::min(prev_hi, b.upper));
        prev_lo = b.lower;
        prev_hi = b.upper;
      }
    }
  }
}

TEST(EulerRayleigh, CrossModuleBracket) {
  const auto b = ry::euler_rayleigh_bounds(5.0, -1.0, 3);
  const double r = coulomb::radii::radius_f(5.0, -1.0, 0.0).value;
  EXPECT_LT(std::sqrt(b.lower), r);
  EXPECT_LT(r, std::sqrt(b.upper));
}

TEST(EulerRayleigh, PositiveChargeIsRejected) {
  try {
    ry::euler_rayleigh_bounds(1.0, 0.5, 1);
    FAIL();
  } catch (const coulomb::Error& e) {
    EXPECT_EQ(e.kind(), coulomb::ErrorKind::GateViolation);
  }
}

TEST(Zeta, BaseCoefficients) {
  const auto z = ry::zeta_coeffs(2, 2);
  EXPECT_EQ(z[0], EtaPolynomial(Rational(1, 2)));
  EXPECT_EQ(z[1], EtaPolynomial(Rational(-3, 4)));
  EXPECT_EQ(z[2], EtaPolynomial({Rational(9, 8), Rational(0), Rational(1, 2)}));
  EXPECT_EQ(z[2].str(), "9/8 + 1/2*eta^2");
}

TEST(Zeta, SecondOrderMatchesExpansionOfClosedForm) {
  // L Z2 = (1/(2 + 3x)) (1 + eta^2 x^2 / (1 + x)^2), x = 1/L
  const int N = 12;
  const auto z = ry::zeta_coeffs(2, N);
  for (int n = 0; n <= N; ++n) {
    auto inv = [](int m) { return Rational(1, 2) * coulomb::exact::pow(Rational(-3, 2), m); };
    Rational c0 = inv(n), c2;
    for (int m = 2; m <= n; ++m) c2 += Rational((m % 2 ? -1 : 1) * (m - 1)) * inv(n - m);
    EXPECT_EQ(z[n], EtaPolynomial({c0, Rational(0), c2})) << "n=" << n;
  }
}

TEST(Zeta, OddOrdersCarryTheCharge) {
  for (int k : {3, 5, 7}) {
    for (const auto& p : ry::zeta_coeffs(k, 5)) EXPECT_TRUE(p(Rational(0)).is_zero()) << k;
  }
}

TEST(Zeta, LeadingEvenCoefficientBound) {
  for (int k = 1; k <= 10; ++k) {
    const auto z0 = ry::zeta_coeffs(2 * k, 0)[0];
    Rational binom(1);
    for (int i = 1; i <= k; ++i) binom = binom * Rational(k + i) / Rational(i);
    const Rational bound = binom / (coulomb::exact::pow(Rational(2), 2 * k) * Rational(2 * k - 1));
    EXPECT_EQ(z0.degree(), 0) << k;
    EXPECT_LE(z0(Rational(0)), bound) << k;
  }
}

TEST(Zeta, TableRejectsOutOfRange) {
  const ry::ZetaTable t(4, 2);
  EXPECT_THROW((void)t.at(5, 0), std::logic_error);
  EXPECT_THROW((void)t.at(2, 3), std::logic_error);
  EXPECT_THROW((void)t.at(1, 0), std::logic_error);
}

TEST(Laurent, LeadingTerm) {
  for (double L : {5.0, 40.0, 300.0}) EXPECT_DOUBLE_EQ(ry::zeta_laurent_eval(2, L, -0.7, 1).value, 0.5 / L);
}

TEST(Laurent, ThreeTermsAtLargeOrder) {
  // the omitted term is (27/16)/L^4; the error at L = 100 is dominated by it
  const auto v = ry::zeta_laurent_eval(2, 100.0, 0.0, 3);
  const double err = std::abs(v.value - 1.0 / 203.0);
  EXPECT_NEAR(err, 27.0 / 16.0 / 1e8, 0.05 * 27.0 / 16.0 / 1e8);
  EXPECT_TRUE(v.in_region);
}

TEST(Laurent, ObservedOrderForFourthSum) {
  for (int n_terms : {1, 2, 3}) {
    auto err = [&](double L) {
      const double exact = ry::rayleigh_Z(Rational::from_double(L), Rational(-1), 4).at(4).to_double();
      return std::abs(ry::zeta_laurent_eval(4, L, -1.0, n_terms).value - exact);
    };
    const double order = std::log2(err(50.0) / err(100.0));
    EXPECT_GE(order, n_terms + 3 - 0.1) << n_terms;
  }
}

TEST(Laurent, ScaledConsistencyOrder) {
  for (int k : {1, 2, 3}) {
    for (int N : {1, 2, 3}) {
      const auto z = ry::zeta_coeffs(2 * k, N);
      std::vector<double> logL, logE;
      for (double L : {50.0, 100.0, 200.0}) {
        const double Z = ry::rayleigh_Z(Rational::from_double(L), Rational(-1), 2 * k).at(2 * k).to_double();
        double partial = 0.0;
        for (int n = 0; n <= N; ++n) partial += z[n].eval(-1.0) * std::pow(L, -n);
        logL.push_back(std::log(L));
        logE.push_back(std::log(std::abs(std::pow(L, 2 * k - 1) * Z - partial)));
      }
      const double slope = (logE[2] - logE[0]) / (logL[2] - logL[0]);
      EXPECT_LE(slope, -(N + 0.5)) << "k=" << k << " N=" << N;
    }
  }
}

TEST(Laurent, RegionFlag) {
  EXPECT_FALSE(ry::zeta_laurent_eval(4, 2.0, 0.0, 2).in_region);
  EXPECT_TRUE(ry::zeta_laurent_eval(4, 3.5, 0.0, 2).in_region);
}
