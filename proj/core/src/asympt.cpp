#include "coulomb/asympt.hpp"

#include <cmath>
#include <stdexcept>

#include "coulomb/error.hpp"
#include "coulomb/radii.hpp"
#include "coulomb/rayleigh.hpp"

namespace coulomb::asympt {

using exact::EtaPolynomial;
using exact::Rational;
using exact::TruncatedSeries;
using P = EtaPolynomialSqrt2;

namespace {

int sgn(int e) { return e % 2 == 0 ? 1 : -1; }

P lift(const EtaPolynomial& q) {
  std::vector<QSqrt2> c;
  for (int k = 0; k <= q.degree(); ++k) c.emplace_back(q.coeff(k));
  return P(std::move(c));
}

P scalar(long v) { return P(QSqrt2(v)); }

class Zeta {
 public:
  Zeta(int k_max, int n_max) : table_(k_max, n_max) {}
  P operator()(int j, int n) const { return lift(table_.at(j, n)); }

 private:
  rayleigh::ZetaTable table_;
};

// Coefficients x^0..x^k_max of (head + eps_1 x + eps_2 x^2 + ...)^power.
std::vector<P> power_coeffs(const P& head, const std::vector<P>& eps, int power, int k_max) {
  std::vector<P> base(static_cast<std::size_t>(k_max) + 1);
  base[0] = head;
  for (int i = 1; i <= k_max && i <= static_cast<int>(eps.size()); ++i) base[i] = eps[i - 1];
  const auto s = TruncatedSeries<P>(0, std::move(base), k_max + 1).pow(power);
  std::vector<P> out;
  for (int k = 0; k <= k_max; ++k) out.push_back(s.coeff(k));
  return out;
}

}  // namespace

const EtaPolynomialSqrt2& EpsilonTable::at(int k) const {
  if (k < 1 || k > size()) throw std::out_of_range("EpsilonTable: index outside 1..N");
  return eps[static_cast<std::size_t>(k) - 1];
}

EpsilonTable epsilon_coeffs(int N, Form form) {
  if (N < 1) throw std::invalid_argument("epsilon_coeffs: N must be >= 1");
  const Zeta zeta(2 * N + 4, N + 2);
  const QSqrt2 c = QSqrt2::sqrt2();
  const P cP(c), eta = P::variable();
  const P head = form == Form::Reconciled ? cP : scalar(1);
  const P inv_lead = P((QSqrt2(2) * c * QSqrt2(exact::p_coeff(2, 0))).inverse());

  std::vector<P> eps;  // eps[k] = eps_{k+1}
  // The equation at index n fixes eps_{n+2}; n = -1 gives eps_1.
  for (int n = -1; n <= N - 2; ++n) {
    const int k_top = n + 1;
    std::vector<std::vector<P>> W(static_cast<std::size_t>(n) + 4);
    for (int m = 1; m <= n + 3; ++m) W[m] = power_coeffs(head, eps, m + 1, std::max(k_top, 0));

    P rest = scalar(sgn(n) * (n + 2)) * cP * eta;
    for (int k = 0; k <= n; ++k) {
      if (form == Form::Reconciled)
        rest += scalar(sgn(n - k + 1) * (n - k + 1)) * eta * eps[k];
      else
        rest += scalar(sgn(n - k) * (n - k)) * eta * eps[k];
    }
    for (int k = 0; k <= n + 2; ++k) rest += scalar(sgn(n - k)) * cP * cP * zeta(2, k);
    for (int j = 0; j <= n; ++j) {
      P conv;
      for (int l = 0; l <= j; ++l) conv += eps[l] * eps[j - l];
      for (int k = 0; k <= n - j; ++k) rest += scalar(sgn(n - j - k)) * zeta(2, k) * conv;
    }
    for (int k = 0; k <= n; ++k) {
      P inner;
      for (int q = 0; q <= n - k + 1; ++q) inner += scalar(sgn(n - k - q + 1)) * zeta(2, q);
      rest += scalar(2) * cP * eps[k] * inner;
    }
    for (int j = 0; j <= n + 1; ++j) {
      P acc;
      for (int m = 2; m <= j + 2; ++m)
        for (int k = 0; k <= j - m + 2; ++k) acc += zeta(2 * m, j - m - k + 2) * W[m][k];
      rest += scalar(sgn(n - j + 1)) * acc;
    }
    for (int j = 0; j <= n; ++j) {
      P acc;
      for (int m = 1; m <= j + 1; ++m)
        for (int k = 0; k <= j - m + 1; ++k) acc += zeta(2 * m + 1, j - m - k + 1) * W[m][k];
      rest += scalar(sgn(n - j)) * acc;
    }
    eps.push_back(-rest * inv_lead);
  }
  return EpsilonTable{c, std::move(eps), form};
}

double radius_asymptotic(const EpsilonTable& table, double L, double eta, int N) {
  if (N < 0 || N > table.size()) throw std::out_of_range("radius_asymptotic: N exceeds the table");
  if (!(L > 0.0)) throw std::invalid_argument("radius_asymptotic: L must be positive");
  double acc = 0.0;
  for (int k = N; k >= 1; --k) acc = (acc + table.at(k).eval(eta)) / L;
  return L * (table.c.to_double() + acc);
}

std::vector<EtaPolynomialSqrt2> annihilation_residuals(const EpsilonTable& table, int N) {
  if (N < 0 || N > table.size()) throw std::out_of_range("annihilation_residuals: N exceeds the table");
  using S = TruncatedSeries<P>;
  const int order = N + 1;
  const Zeta zeta(2 * N + 4, N + 2);
  const P eta = P::variable();

  std::vector<P> ce{P(table.c)};
  for (int k = 1; k <= N; ++k) ce.push_back(table.at(k));
  const S CE(0, ce, order);

  std::vector<P> g1, g2;
  for (int p = 0; p <= N; ++p) {
    g1.push_back(scalar(sgn(p)));
    g2.push_back(scalar(sgn(p) * (p + 1)));
  }
  const S inv1(0, g1, order), inv2(0, g2, order);

  S sum = S::zero(order);
  for (int m = 1; m - 1 <= N; ++m) {
    std::vector<P> ze;
    for (int n = 0; n + m - 1 <= N; ++n) ze.push_back(zeta(2 * m, n));
    S z = S(m - 1, ze, order);
    if (m + 1 <= N) {
      std::vector<P> zo;
      for (int n = 0; n + m + 1 <= N; ++n) zo.push_back(zeta(2 * m + 1, n));
      z = z + S(m + 1, zo, order);
    }
    sum = sum + CE.pow(m + 1) * z;
  }
  const S rhs = inv1 * sum - S::monomial(eta, 1) * CE * inv2 - S::constant(scalar(1));
  std::vector<P> out;
  for (int n = 0; n <= N; ++n) out.push_back(rhs.coeff(n));
  return out;
}

OrderFit empirical_order(const std::vector<double>& L_grid, const std::vector<double>& direct, double eta, int N,
                         const EpsilonTable& table) {
  if (L_grid.size() < 3 || direct.size() != L_grid.size())
    throw std::invalid_argument("empirical_order: need at least three grid points with matching radii");
  for (std::size_t i = 1; i < L_grid.size(); ++i)
    if (!(L_grid[i] > L_grid[i - 1])) throw std::invalid_argument("empirical_order: grid must be ascending");

  OrderFit fit;
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < L_grid.size(); ++i) {
    const double L = L_grid[i];
    const double e = std::abs(direct[i] - radius_asymptotic(table, L, eta, N)) / L;
    fit.scaled_error.push_back(e);
    if (!(e >= 1e-15) || !std::isfinite(e))
      throw Error(ErrorKind::DegenerateFit, "empirical_order: scaled error below 1e-15 at L = " + std::to_string(L));
    xs.push_back(std::log(L));
    ys.push_back(std::log(e));
  }
  const double n = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  fit.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  fit.intercept = (sy - fit.slope * sx) / n;
  double ss = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double d = ys[i] - (fit.intercept + fit.slope * xs[i]);
    ss += d * d;
  }
  fit.residual = std::sqrt(ss / n);
  return fit;
}

OrderFit empirical_order(const std::vector<double>& L_grid, double eta, int N, const EpsilonTable& table) {
  std::vector<double> direct;
  for (double L : L_grid) direct.push_back(radii::radius_f(L, eta, 0.0).value);
  return empirical_order(L_grid, direct, eta, N, table);
}

}  // namespace coulomb::asympt
