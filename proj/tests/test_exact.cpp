#include <gtest/gtest.h>

#include <random>

#include "coulomb/exact.hpp"

using namespace coulomb::exact;

namespace {

Rational random_rational(std::mt19937_64& rng, int span = 20) {
  std::uniform_int_distribution<long> num(-span, span), den(1, span);
  return Rational(num(rng), den(rng));
}

QSqrt2 random_qsqrt2(std::mt19937_64& rng) { return {random_rational(rng), random_rational(rng)}; }

TruncatedSeries<Rational> random_series(std::mt19937_64& rng, int order) {
  std::uniform_int_distribution<int> lead(-2, 2), len(0, 4);
  std::vector<Rational> c(static_cast<std::size_t>(len(rng)));
  for (auto& x : c) x = random_rational(rng, 6);
  const int lo = lead(rng);
  if (lo + static_cast<int>(c.size()) > order) c.resize(static_cast<std::size_t>(std::max(0, order - lo)));
  return TruncatedSeries<Rational>(lo, std::move(c), order);
}

void expect_same_series(const TruncatedSeries<Rational>& a, const TruncatedSeries<Rational>& b) {
  ASSERT_EQ(a.order(), b.order());
  for (int e = -6; e < a.order(); ++e) EXPECT_EQ(a.coeff(e), b.coeff(e)) << "x^" << e;
}

}  // namespace

TEST(Rational, Canonical) {
  EXPECT_EQ(Rational(2, 4), Rational(1, 2));
  EXPECT_EQ(Rational(1, -2).denominator(), 2);
  EXPECT_EQ(Rational(1, -2).numerator(), -1);
  EXPECT_EQ(Rational(6, 3).str(), "2");
  EXPECT_THROW(Rational(1, 0), std::exception);
}

TEST(Rational, Parse) {
  EXPECT_EQ(Rational::parse("-0.5"), Rational(-1, 2));
  EXPECT_EQ(Rational::parse("2.5e-3"), Rational(1, 400));
  EXPECT_EQ(Rational::parse("7/12"), Rational(7, 12));
  EXPECT_EQ(Rational::parse("3"), Rational(3));
  EXPECT_THROW(Rational::parse("abc"), std::exception);
}

TEST(Rational, FromDoubleIsExact) {
  EXPECT_EQ(Rational::from_double(0.1).to_double(), 0.1);
  EXPECT_NE(Rational::from_double(0.1), Rational(1, 10));
  EXPECT_EQ(Rational::from_double(-2.75), Rational(-11, 4));
}

TEST(QSqrt2, UnitAndProducts) {
  EXPECT_EQ(QSqrt2(1, 1) * QSqrt2(-1, 1), QSqrt2(1));
  EXPECT_EQ(QSqrt2::sqrt2() * QSqrt2::sqrt2(), QSqrt2(2));
  // (ac + 2bd) + (ad + bc) sqrt2
  EXPECT_EQ(QSqrt2(Rational(2), Rational(3)) * QSqrt2(Rational(5), Rational(7)), QSqrt2(Rational(52), Rational(29)));
  EXPECT_TRUE(QSqrt2(0, 0).is_zero());
  EXPECT_FALSE(QSqrt2(Rational(0), Rational(1, 1000)).is_zero());
}

TEST(QSqrt2, InverseOnRandomSamples) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 200; ++i) {
    const QSqrt2 x = random_qsqrt2(rng);
    if (x.is_zero()) continue;
    EXPECT_EQ(x * x.inverse(), QSqrt2(1));
  }
  EXPECT_THROW(QSqrt2(0).inverse(), std::exception);
}

TEST(QSqrt2, StringForm) {
  EXPECT_EQ(QSqrt2::sqrt2().str(), "sqrt2");
  EXPECT_EQ(QSqrt2(Rational(-1, 2), Rational(1, 4)).str(), "sqrt2/4 - 1/2");
}

TEST(PCoeff, Examples) {
  EXPECT_EQ(p_coeff(2, 0), Rational(1, 2));
  EXPECT_EQ(p_coeff(2, 1), Rational(-3, 4));
  EXPECT_EQ(p_coeff(3, 2), Rational(2));
  for (int a = 1; a < 6; ++a) EXPECT_EQ(p_coeff(a, 0), Rational(1, 2));
}

TEST(GeometricExpansion, CoefficientsAndInverseIdentity) {
  const auto s = geometric_expansion(2, 2);
  EXPECT_EQ(s.coeff(1), Rational(1, 2));
  EXPECT_EQ(s.coeff(2), Rational(-3, 4));
  EXPECT_EQ(s.coeff(3), Rational(9, 8));
  // (2L + 3) = x^{-1}(2 + 3x) with x = 1/L
  const TruncatedSeries<Rational> lin(-1, {Rational(2), Rational(3)}, kExactOrder);
  const auto one = lin * s;
  EXPECT_EQ(one.coeff(0), Rational(1));
  for (int e = 1; e < one.order(); ++e) EXPECT_TRUE(one.coeff(e).is_zero()) << e;
  EXPECT_EQ(one.order(), 3);
}

TEST(GeometricExpansion, ConvergesToClosedForm) {
  double prev = 1.0;
  for (int n : {1, 3, 6, 10}) {
    const double err = std::abs(geometric_expansion(2, n).evaluate_at(1.0 / 100.0) - 1.0 / 203.0);
    EXPECT_LT(err, prev);
    prev = err;
  }
  EXPECT_LT(prev, 1e-22);
}

TEST(TruncatedSeries, ProductTruncates) {
  const TruncatedSeries<Rational> a(0, {Rational(1), Rational(1)}, 3), b(0, {Rational(1), Rational(-1)}, 3);
  const auto p = a * b;
  EXPECT_EQ(p.order(), 3);
  EXPECT_EQ(p.coeff(0), Rational(1));
  EXPECT_EQ(p.coeff(1), Rational(0));
  EXPECT_EQ(p.coeff(2), Rational(-1));
}

TEST(TruncatedSeries, NothingReportedAtOrBeyondOrder) {
  const TruncatedSeries<Rational> a(0, {Rational(1), Rational(2)}, 2);
  const auto p = a.pow(5);
  EXPECT_EQ(p.order(), 2);
  EXPECT_LE(p.lead() + static_cast<int>(p.coeffs().size()), 2);
  EXPECT_THROW((void)p.coeff(2), std::exception);
}

TEST(TruncatedSeries, RingLaws) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 100; ++i) {
    const auto a = random_series(rng, 5), b = random_series(rng, 5), c = random_series(rng, 5);
    // truncation of a product depends on the leads, so compare at a common order
    const auto lhs = ((a * b) * c), rhs = (a * (b * c));
    const int ord = std::min(lhs.order(), rhs.order());
    expect_same_series(lhs.truncate(ord), rhs.truncate(ord));
    const auto d1 = a * (b + c), d2 = a * b + a * c;
    const int ord2 = std::min(d1.order(), d2.order());
    expect_same_series(d1.truncate(ord2), d2.truncate(ord2));
    expect_same_series(a + b, b + a);
  }
}

TEST(Polynomial, RationalVsFloatEvaluation) {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 30; ++t) {
    std::vector<Rational> c(31);
    for (auto& x : c) x = random_rational(rng, 9);
    const EtaPolynomial p(c);
    for (Rational eta : {Rational(-4), Rational(-7, 3), Rational(1, 5), Rational(4)}) {
      const double exact = p(eta).to_double();
      EXPECT_NEAR(p.eval(eta.to_double()), exact, 1e-14 * std::max(1.0, std::abs(exact)) * 50);
    }
  }
}

TEST(Polynomial, Display) {
  const EtaPolynomial p({Rational(9, 8), Rational(0), Rational(1, 2)});
  EXPECT_EQ(p.str(), "9/8 + 1/2*eta^2");
  EXPECT_EQ(EtaPolynomial().str(), "0");
  const EtaPolynomialSqrt2 q({QSqrt2(Rational(-1, 2), Rational(1, 4)), QSqrt2::sqrt2()});
  EXPECT_EQ(q.str(TermOrder::Descending), "sqrt2*eta + sqrt2/4 - 1/2");
}

TEST(PotentialPolynomials, BinomialRow) {
  const auto A = potential_polynomials<Rational>(3, {Rational(1)}, 6);
  const long binom[] = {1, 3, 3, 1, 0, 0, 0};
  for (int k = 0; k <= 6; ++k) EXPECT_EQ(A[k], Rational(binom[k])) << k;
}

TEST(PotentialPolynomials, LowOrderFormulas) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 20; ++i) {
    const Rational a1 = random_rational(rng), a2 = random_rational(rng);
    for (int alpha : {1, 2, 3, 5}) {
      const auto A = potential_polynomials<Rational>(alpha, {a1, a2}, 2);
      EXPECT_EQ(A[0], Rational(1));
      EXPECT_EQ(A[1], Rational(alpha) * a1);
      EXPECT_EQ(A[2], Rational(alpha) * a2 + Rational(alpha * (alpha - 1), 2) * a1 * a1);
    }
  }
}

TEST(PotentialPolynomials, MatchNaivePower) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 50; ++t) {
    const int N = 5, alpha = 1 + t % 5;
    std::vector<Rational> args(N);
    for (auto& x : args) x = random_rational(rng, 5);
    // naive dense multiplication, truncated to degree N
    std::vector<Rational> base(N + 1);
    base[0] = Rational(1);
    for (int i = 1; i <= N; ++i) base[i] = args[i - 1];
    std::vector<Rational> acc = base;
    for (int p = 1; p < alpha; ++p) {
      std::vector<Rational> next(N + 1);
      for (int i = 0; i <= N; ++i)
        for (int j = 0; i + j <= N; ++j) next[i + j] += acc[i] * base[j];
      acc = next;
    }
    const auto A = potential_polynomials<Rational>(alpha, args, N);
    for (int k = 0; k <= N; ++k) EXPECT_EQ(A[k], acc[k]);
  }
}

TEST(PotentialPolynomials, OverQSqrt2Polynomials) {
  const auto eta = EtaPolynomialSqrt2::variable();
  const EtaPolynomialSqrt2 e1 = eta + EtaPolynomialSqrt2(QSqrt2::sqrt2());
  const EtaPolynomialSqrt2 e2 = eta * eta;
  const auto A = potential_polynomials<EtaPolynomialSqrt2>(2, {e1, e2}, 2);
  EXPECT_EQ(A[2], EtaPolynomialSqrt2(QSqrt2(2)) * e2 + e1 * e1);
}
