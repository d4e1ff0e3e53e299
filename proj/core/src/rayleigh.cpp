#include "coulomb/rayleigh.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <type_traits>

#include "coulomb/error.hpp"

namespace coulomb::rayleigh {

using exact::EtaPolynomial;
using exact::Rational;

namespace {

template <class R>
constexpr bool kFloat = std::is_same_v<R, double> || std::is_same_v<R, __float128>;

template <class R>
double magnitude(const R& x) {
  return std::fabs(static_cast<double>(x));
}

// Accumulates a sum and, in float mode, the sum of magnitudes of its parts.
template <class R>
struct Sum {
  R value{};
  double mass = 0.0;
  void add(const R& x) {
    value += x;
    if constexpr (kFloat<R>) mass += magnitude(x);
  }
};

template <class R>
void note_condition(RayleighTable<R>& t, const Sum<R>& s, const R& result) {
  if constexpr (kFloat<R>) {
    if (result != R(0)) t.condition = std::max(t.condition, s.mass / magnitude(result));
  }
}

template <class R>
bool le(const R& a, const R& b) {
  return a <= b;
}

template <class R>
void require_order_above_minus_one(const R& L, const char* who) {
  if (le(L, R(-1))) throw Error(ErrorKind::DegenerateOrder, std::string(who) + ": requires L > -1");
}

// Bottom-up table that refuses to read an entry before it is written.
template <class R>
class Slots {
 public:
  explicit Slots(int n) : v_(static_cast<std::size_t>(n) + 1), set_(static_cast<std::size_t>(n) + 1, false) {}
  const R& get(int k) const {
    if (k < 0 || k >= static_cast<int>(v_.size()) || !set_[k])
      throw std::logic_error("Ztilde recurrence read index " + std::to_string(k) + " before it was populated");
    return v_[k];
  }
  void put(int k, R x) {
    v_.at(k) = std::move(x);
    set_[k] = true;
  }
  std::vector<R> release() { return std::move(v_); }

 private:
  std::vector<R> v_;
  std::vector<bool> set_;
};

}  // namespace

template <class R>
const R& RayleighTable<R>::at(int k) const {
  if (k < 2 || k > k_max) throw std::out_of_range("RayleighTable: k outside [2, k_max]");
  return values[static_cast<std::size_t>(k)];
}

template <class R>
RayleighTable<R> rayleigh_Z(const R& L, const R& eta, int k_max) {
  require_order_above_minus_one(L, "rayleigh_Z");
  if (k_max < 2) throw std::invalid_argument("rayleigh_Z: k_max must be >= 2");
  RayleighTable<R> t{L, eta, k_max, std::vector<R>(static_cast<std::size_t>(k_max) + 1), 1.0};
  auto& Z = t.values;
  const R L1 = L + R(1);
  Z[2] = (R(1) + eta * eta / (L1 * L1)) / (R(2) * L + R(3));
  for (int k = 2; k < k_max; ++k) {
    Sum<R> s;
    s.add(R(2) * eta / L1 * Z[k]);
    for (int l = 1; l <= k - 2; ++l) s.add(Z[l + 1] * Z[k - l]);
    const R den = R(2) * L + R(k + 2);
    if (den == R(0)) throw Error(ErrorKind::DegenerateOrder, "rayleigh_Z: vanishing denominator");
    Z[k + 1] = s.value / den;
    note_condition(t, s, Z[k + 1]);
  }
  return t;
}

template <class R>
std::vector<R> gen_coeffs_a(const R& L, const R& eta, int n_max) {
  const R lam = L * (L + R(1));
  if (lam == R(0)) throw Error(ErrorKind::DegenerateOrder, "gen_coeffs_a: L(L+1) vanishes");
  std::vector<R> a;
  if (n_max < 0) return a;
  a.push_back(R(2) * eta / lam);
  if (n_max >= 1) a.push_back(-(R(2) + R(2) * eta * a[0]) / lam);
  for (int n = 2; n <= n_max; ++n) a.push_back(-(R(2) * eta * a[n - 1] - a[n - 2]) / lam);
  return a;
}

namespace {

template <class R>
RayleighTable<R> ztilde_table(const R& L, const R& eta, int k_max) {
  require_order_above_minus_one(L, "rayleigh_Ztilde");
  if (L == R(0)) throw Error(ErrorKind::DegenerateOrder, "rayleigh_Ztilde: L = 0 is excluded");
  if (k_max < 2) throw std::invalid_argument("rayleigh_Ztilde: k_max must be >= 2");

  const std::vector<R> a = gen_coeffs_a(L, eta, std::max(2, k_max - 1));
  const R L1 = L + R(1);
  const R pt = (L + R(2)) * eta / (L1 * L1);
  RayleighTable<R> t{L, eta, k_max, {}, 1.0};
  Slots<R> Zt(k_max);

  {
    Sum<R> s;
    s.add(R(1));
    s.add(-L * a[1]);
    s.add(-pt * a[0]);
    s.add(pt * pt);
    Zt.put(2, s.value / (R(2) * L + R(3)));
    note_condition(t, s, Zt.get(2));
  }
  if (k_max >= 3) {
    Sum<R> s;
    s.add(-L * a[2]);
    s.add(-pt * a[1]);
    s.add(a[0] * Zt.get(2));
    s.add(-R(2) * pt * Zt.get(2));
    Zt.put(3, s.value / (R(2) * L + R(4)));
    note_condition(t, s, Zt.get(3));
  }
  for (int n = 0; n + 4 <= k_max; ++n) {
    Sum<R> s;
    s.add(-L * a[n + 3]);
    s.add(-pt * a[n + 2]);
    for (int m = 0; m <= n + 1; ++m) s.add(a[m] * Zt.get(3 + n - m));
    for (int m = 0; m <= n; ++m) s.add(Zt.get(m + 2) * Zt.get(n - m + 2));
    s.add(-R(2) * pt * Zt.get(n + 3));
    Zt.put(n + 4, s.value / (R(2) * L + R(n + 5)));
    note_condition(t, s, Zt.get(n + 4));
  }
  t.values = Zt.release();
  return t;
}

}  // namespace

template <class R>
RayleighTable<R> rayleigh_Ztilde(const R& L, const R& eta, int k_max) {
  if constexpr (std::is_same_v<R, double>) {
    // the a_n grow like L(L+1)^{-n} and the recurrence cancels them against
    // each other, so doubles lose a digit every few orders; carry 113 bits
    const auto wide = ztilde_table<__float128>(L, eta, k_max);
    RayleighTable<double> t{L, eta, k_max, std::vector<double>(wide.values.size()), wide.condition};
    for (std::size_t k = 2; k < wide.values.size(); ++k) t.values[k] = static_cast<double>(wide.values[k]);
    return t;
  } else {
    return ztilde_table(L, eta, k_max);
  }
}

namespace {
double as_double(const Rational& x) { return x.to_double(); }
double as_double(double x) { return x; }
}  // namespace

template <class R>
EulerRayleighBounds euler_rayleigh_bounds(const R& L, const R& eta, int s) {
  if (s < 1) throw std::invalid_argument("euler_rayleigh_bounds: s must be >= 1");
  if (R(0) < eta) throw Error(ErrorKind::GateViolation, "euler_rayleigh_bounds requires eta <= 0");
  const auto t = rayleigh_Ztilde(L, eta, 2 * s + 2);
  const R& lo = t.at(2 * s);
  const R& hi = t.at(2 * s + 2);
  if (!(R(0) < lo) || !(R(0) < hi))
    throw Error(ErrorKind::BoundsInvalid, "euler_rayleigh_bounds: Ztilde^(" + std::to_string(2 * s) + ") or Ztilde^(" +
                                              std::to_string(2 * s + 2) + ") is not positive");
  EulerRayleighBounds b;
  b.s = s;
  b.lower = std::pow(as_double(lo), -1.0 / s);
  b.upper = as_double(lo / hi);
  return b;
}

std::vector<double> rayleigh_values(Which which, double L, double eta, int k_max, bool* used_exact) {
  std::vector<double> out;
  const bool exact_mode = k_max <= 40;
  if (used_exact) *used_exact = exact_mode;
  if (exact_mode) {
    const Rational Lq = Rational::from_double(L), eq = Rational::from_double(eta);
    const auto t = which == Which::Z ? rayleigh_Z(Lq, eq, k_max) : rayleigh_Ztilde(Lq, eq, k_max);
    for (const auto& v : t.values) out.push_back(v.to_double());
  } else {
    const auto t = which == Which::Z ? rayleigh_Z(L, eta, k_max) : rayleigh_Ztilde(L, eta, k_max);
    out = t.values;
  }
  return out;
}

template struct RayleighTable<Rational>;
template struct RayleighTable<double>;
template RayleighTable<Rational> rayleigh_Z(const Rational&, const Rational&, int);
template RayleighTable<double> rayleigh_Z(const double&, const double&, int);
template std::vector<Rational> gen_coeffs_a(const Rational&, const Rational&, int);
template std::vector<double> gen_coeffs_a(const double&, const double&, int);
template RayleighTable<Rational> rayleigh_Ztilde(const Rational&, const Rational&, int);
template RayleighTable<double> rayleigh_Ztilde(const double&, const double&, int);
template EulerRayleighBounds euler_rayleigh_bounds(const Rational&, const Rational&, int);
template EulerRayleighBounds euler_rayleigh_bounds(const double&, const double&, int);

// ---------------------------------------------------------------------------
// Laurent coefficients.

ZetaTable::ZetaTable(int k_max, int n_max) : k_max_(k_max), n_max_(n_max) {
  if (k_max < 2 || n_max < 0) throw std::invalid_argument("ZetaTable: need k_max >= 2, n_max >= 0");
  z_.assign(static_cast<std::size_t>(k_max) + 1, {});
  const EtaPolynomial eta = EtaPolynomial::variable();
  const EtaPolynomial two_eta = EtaPolynomial(Rational(2)) * eta;
  auto p = [](int alpha, int n) { return EtaPolynomial(exact::p_coeff(alpha, n)); };
  // zeta of index j at position n, with zero for n < 0
  auto Z = [this](int j, int n) -> EtaPolynomial {
    if (n < 0) return {};
    return at(j, n);
  };
  // sum_{l=0}^{n} sum_{m=0}^{l} (-1)^m p^{(alpha)}_{l-m} zeta^{(j)}_{n-l}
  auto shifted = [&](int alpha, int j, int n) {
    EtaPolynomial acc;
    for (int l = 0; l <= n; ++l) {
      EtaPolynomial inner;
      for (int m = 0; m <= l; ++m) {
        const EtaPolynomial term = p(alpha, l - m);
        if (m % 2) inner -= term;
        else inner += term;
      }
      acc += inner * Z(j, n - l);
    }
    return acc;
  };
  // sum_{q=0}^{n} sum_{m=0}^{q} zeta^{(i)}_m zeta^{(j)}_{q-m} p^{(alpha)}_{n-q}
  auto pair = [&](int i, int j, int alpha, int n) {
    EtaPolynomial acc;
    for (int q = 0; q <= n; ++q) {
      EtaPolynomial conv;
      for (int m = 0; m <= q; ++m) conv += Z(i, m) * Z(j, q - m);
      acc += conv * p(alpha, n - q);
    }
    return acc;
  };

  for (int j = 2; j <= k_max; ++j) {
    auto& row = z_[j];
    row.reserve(static_cast<std::size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) {
      EtaPolynomial v;
      if (j == 2) {
        if (n <= 1) {
          v = p(2, n);
        } else {
          v = p(2, n);
          for (int m = 0; m <= n - 2; ++m) {
            const EtaPolynomial term = EtaPolynomial(Rational(m + 1)) * eta * eta * p(2, n - 2 - m);
            if (m % 2) v -= term;
            else v += term;
          }
        }
      } else if (j == 3) {
        v = two_eta * shifted(3, 2, n);
      } else if (j % 2 == 0) {
        const int k = j / 2;
        for (int l = 0; l <= k - 2; ++l) v += pair(2 * l + 2, 2 * k - 2 * l - 2, j, n);
        if (n >= 2) {
          for (int l = 1; l <= k - 2; ++l) v += pair(2 * l + 1, 2 * k - 2 * l - 1, j, n - 2);
          v += two_eta * shifted(j, j - 1, n - 2);
        }
      } else {
        const int k = (j - 1) / 2;
        v = two_eta * shifted(j, 2 * k, n);
        for (int l = 1; l <= k - 1; ++l) v += pair(2 * l + 1, 2 * k - 2 * l, j, n);
        for (int l = 0; l <= k - 2; ++l) v += pair(2 * l + 2, 2 * k - 2 * l - 1, j, n);
      }
      row.push_back(std::move(v));
    }
  }
}

const EtaPolynomial& ZetaTable::at(int j, int n) const {
  if (j < 2 || j > k_max_ || n < 0 || n > n_max_ || static_cast<std::size_t>(n) >= z_[j].size())
    throw std::logic_error("ZetaTable: zeta^(" + std::to_string(j) + ")_" + std::to_string(n) +
                           " requested outside the materialised table");
  return z_[j][n];
}

std::vector<EtaPolynomial> zeta_coeffs(int k, int n_max) {
  const ZetaTable t(k, n_max);
  std::vector<EtaPolynomial> out;
  for (int n = 0; n <= n_max; ++n) out.push_back(t.at(k, n));
  return out;
}

LaurentValue zeta_laurent_eval(int k, double L, double eta, int n_terms) {
  if (k < 2) throw std::invalid_argument("zeta_laurent_eval: k must be >= 2");
  if (n_terms < 1) throw std::invalid_argument("zeta_laurent_eval: n_terms must be >= 1");
  if (!(L > 0.0)) throw std::invalid_argument("zeta_laurent_eval: L must be positive");
  const auto zeta = zeta_coeffs(k, n_terms - 1);
  const int lead = k % 2 == 0 ? k - 1 : k;
  double acc = 0.0;
  for (int n = n_terms - 1; n >= 0; --n) acc = acc / L + zeta[n].eval(eta);
  LaurentValue out;
  out.value = acc * std::pow(L, -lead);
  out.in_region = L > k / 2 + 1;
  return out;
}

}  // namespace coulomb::rayleigh
