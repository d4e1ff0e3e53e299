#pragma once

// Exact scalars (Q and Q(sqrt 2)), polynomials in eta and truncated
// Laurent series. Everything here is a value type.

#include <gmpxx.h>

#include <algorithm>
#include <climits>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace coulomb::exact {

class Rational {
 public:
  Rational() = default;
  Rational(long n) : v_(n) {}  // NOLINT: integer literals convert implicitly
  Rational(long num, long den);
  explicit Rational(mpq_class v);

  // Accepts "p/q", integers and decimal literals such as "-0.5" or "2.5e-3".
  static Rational parse(std::string_view text);
  // Exact binary value of a finite double.
  static Rational from_double(double x);

  const mpq_class& get() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }
  double to_double() const { return v_.get_d(); }
  std::string str() const { return v_.get_str(); }
  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  Rational abs() const { return Rational(mpq_class(::abs(v_))); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

 private:
  mpq_class v_;
};

Rational pow(const Rational& base, int exponent);

// a + b*sqrt(2) with rational a, b.
class QSqrt2 {
 public:
  QSqrt2() = default;
  QSqrt2(long n) : a_(n) {}  // NOLINT
  QSqrt2(Rational a) : a_(std::move(a)) {}  // NOLINT
  QSqrt2(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  static QSqrt2 sqrt2() { return {Rational(0), Rational(1)}; }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  QSqrt2 conjugate() const { return {a_, -b_}; }
  Rational norm() const { return a_ * a_ - Rational(2) * b_ * b_; }
  QSqrt2 inverse() const;
  double to_double() const;
  std::string str() const;

  QSqrt2& operator+=(const QSqrt2& o) { a_ += o.a_; b_ += o.b_; return *this; }
  QSqrt2& operator-=(const QSqrt2& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
  QSqrt2& operator*=(const QSqrt2& o);
  QSqrt2& operator/=(const QSqrt2& o) { return *this *= o.inverse(); }

  friend QSqrt2 operator+(QSqrt2 x, const QSqrt2& y) { return x += y; }
  friend QSqrt2 operator-(QSqrt2 x, const QSqrt2& y) { return x -= y; }
  friend QSqrt2 operator*(QSqrt2 x, const QSqrt2& y) { return x *= y; }
  friend QSqrt2 operator/(QSqrt2 x, const QSqrt2& y) { return x /= y; }
  friend QSqrt2 operator-(const QSqrt2& x) { return {-x.a_, -x.b_}; }
  friend bool operator==(const QSqrt2& x, const QSqrt2& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
  friend bool operator!=(const QSqrt2& x, const QSqrt2& y) { return !(x == y); }

 private:
  Rational a_;
  Rational b_;
};

inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_zero(const QSqrt2& x) { return x.is_zero(); }
inline bool is_zero(double x) { return x == 0.0; }
inline double to_double(const Rational& x) { return x.to_double(); }
inline double to_double(const QSqrt2& x) { return x.to_double(); }
inline double to_double(double x) { return x; }

namespace detail {
// Append coef*monomial to a "+"/"-" joined expression; monomial may be "".
void append_term(std::string& out, const Rational& coef, const std::string& monomial);
void append_terms(std::string& out, const Rational& coef, const std::string& monomial);
void append_terms(std::string& out, const QSqrt2& coef, const std::string& monomial);
void append_terms(std::string& out, double coef, const std::string& monomial);
}  // namespace detail

enum class TermOrder { Ascending, Descending };

// Dense polynomial in one indeterminate (eta by default); trailing zeros trimmed.
template <class R>
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(R constant) : c_{std::move(constant)} { trim(); }  // NOLINT
  explicit Polynomial(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial monomial(R coef, int power) {
    std::vector<R> c(static_cast<std::size_t>(power) + 1);
    c.back() = std::move(coef);
    return Polynomial(std::move(c));
  }
  static Polynomial variable() { return monomial(R(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<R>& coeffs() const { return c_; }
  R coeff(int k) const { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : R{}; }

  R operator()(const R& x) const {
    R acc{};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }
  double eval(double x) const {
    double acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + to_double(*it);
    return acc;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
  friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }
  friend Polynomial operator-(Polynomial p) {
    for (auto& x : p.c_) x = -x;
    return p;
  }
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<R> out(p.c_.size() + q.c_.size() - 1);
    for (std::size_t i = 0; i < p.c_.size(); ++i) {
      if (exact::is_zero(p.c_[i])) continue;
      for (std::size_t j = 0; j < q.c_.size(); ++j) out[i + j] += p.c_[i] * q.c_[j];
    }
    return Polynomial(std::move(out));
  }
  friend bool operator==(const Polynomial& p, const Polynomial& q) { return p.c_ == q.c_; }
  friend bool operator!=(const Polynomial& p, const Polynomial& q) { return !(p == q); }

  std::string str(TermOrder order = TermOrder::Ascending, const std::string& var = "eta") const {
    std::string out;
    auto emit = [&](int k) {
      std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
      detail::append_terms(out, c_[k], mono);
    };
    if (order == TermOrder::Ascending) {
      for (int k = 0; k <= degree(); ++k) emit(k);
    } else {
      for (int k = degree(); k >= 0; --k) emit(k);
    }
    return out.empty() ? "0" : out;
  }

 private:
  void trim() {
    while (!c_.empty() && exact::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<R> c_;
};

template <class R>
bool is_zero(const Polynomial<R>& p) {
  return p.degree() < 0;
}

using EtaPolynomial = Polynomial<Rational>;
using EtaPolynomialSqrt2 = Polynomial<QSqrt2>;

inline constexpr int kExactOrder = INT_MAX;

namespace detail {
inline int order_add(int a, int b) {
  if (a == kExactOrder || b == kExactOrder) return kExactOrder;
  const std::int64_t s = static_cast<std::int64_t>(a) + b;
  return static_cast<int>(std::clamp<std::int64_t>(s, INT_MIN / 2, INT_MAX - 1));
}
}  // namespace detail

// sum_{i} coeffs[i] x^(lead+i) + O(x^order).  order == kExactOrder marks a
// finite exact expression.  Coefficients at or beyond order are never stored,
// and the order never grows silently.
template <class R>
class TruncatedSeries {
 public:
  TruncatedSeries() : lead_(kExactOrder), order_(kExactOrder) {}
  TruncatedSeries(int lead, std::vector<R> coeffs, int order)
      : lead_(lead), c_(std::move(coeffs)), order_(order) {
    if (order_ != kExactOrder && static_cast<std::int64_t>(lead_) + static_cast<std::int64_t>(c_.size()) > order_)
      throw std::invalid_argument("TruncatedSeries: coefficients reach the truncation order");
    normalize();
  }

  static TruncatedSeries constant(R c, int order = kExactOrder) {
    return TruncatedSeries(0, {std::move(c)}, order);
  }
  static TruncatedSeries monomial(R c, int power, int order = kExactOrder) {
    return TruncatedSeries(power, {std::move(c)}, order);
  }
  static TruncatedSeries zero(int order) { return TruncatedSeries(0, {}, order); }

  int lead() const { return lead_; }
  int order() const { return order_; }
  bool is_exact() const { return order_ == kExactOrder; }
  const std::vector<R>& coeffs() const { return c_; }

  R coeff(int exponent) const {
    if (exponent >= order_) throw std::out_of_range("TruncatedSeries: coefficient beyond truncation order");
    if (c_.empty() || exponent < lead_) return R{};
    const std::int64_t i = static_cast<std::int64_t>(exponent) - lead_;
    return i < static_cast<std::int64_t>(c_.size()) ? c_[static_cast<std::size_t>(i)] : R{};
  }

  TruncatedSeries truncate(int new_order) const {
    if (new_order > order_) throw std::invalid_argument("TruncatedSeries: cannot raise the truncation order");
    std::vector<R> c;
    if (!c_.empty()) {
      for (int e = lead_; e < new_order && e - lead_ < static_cast<int>(c_.size()); ++e) c.push_back(c_[e - lead_]);
    }
    const int lead = c.empty() ? 0 : lead_;
    return TruncatedSeries(lead, std::move(c), new_order);
  }

  TruncatedSeries pow(int n) const {
    if (n < 0) throw std::invalid_argument("TruncatedSeries::pow: negative exponent");
    TruncatedSeries acc = constant(R(1));
    for (int i = 0; i < n; ++i) acc = acc * *this;
    return acc;
  }

  // this(inner) for a power series `this` (lead >= 0) and inner with lead >= 1.
  TruncatedSeries compose(const TruncatedSeries& inner) const {
    if (!c_.empty() && lead_ < 0) throw std::invalid_argument("compose: outer series has negative powers");
    if (!inner.c_.empty() && inner.lead_ < 1) throw std::invalid_argument("compose: inner series must vanish at 0");
    const int top = c_.empty() ? -1 : lead_ + static_cast<int>(c_.size()) - 1;
    TruncatedSeries acc;
    for (int k = top; k >= 0; --k) acc = acc * inner + constant(coeff(k));
    if (!is_exact()) {
      const int li = inner.c_.empty() ? inner.order_ : inner.lead_;
      const std::int64_t cap = static_cast<std::int64_t>(li) * order_;
      if (cap < acc.order_) acc = acc.truncate(static_cast<int>(cap));
    }
    return acc;
  }

  template <class X>
  X evaluate(const X& x) const {
    X acc{};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + X(*it);
    X p(1);
    const int e = c_.empty() ? 0 : lead_;
    const X base = e >= 0 ? x : X(1) / x;
    for (int i = 0; i < (e >= 0 ? e : -e); ++i) p = p * base;
    return acc * p;
  }
  double evaluate_at(double x) const {
    double acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + to_double(*it);
    return c_.empty() ? 0.0 : acc * std::pow(x, lead_);
  }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    return combine(a, b, false);
  }
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    return combine(a, b, true);
  }
  friend TruncatedSeries operator-(const TruncatedSeries& a) {
    TruncatedSeries r = a;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const R& s) {
    TruncatedSeries r = a;
    for (auto& x : r.c_) x *= s;
    r.normalize();
    return r;
  }
  friend TruncatedSeries operator*(const R& s, const TruncatedSeries& a) { return a * s; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int order = std::min(detail::order_add(a.lead_, b.order_), detail::order_add(b.lead_, a.order_));
    if (a.c_.empty() || b.c_.empty()) return zero(order);
    const int lead = a.lead_ + b.lead_;
    std::size_t n = a.c_.size() + b.c_.size() - 1;
    if (order != kExactOrder) n = std::min<std::size_t>(n, static_cast<std::size_t>(std::max(0, order - lead)));
    std::vector<R> out(n);
    for (std::size_t i = 0; i < a.c_.size() && i < n; ++i) {
      if (exact::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size() && i + j < n; ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return TruncatedSeries(lead, std::move(out), order);
  }

 private:
  static TruncatedSeries combine(const TruncatedSeries& a, const TruncatedSeries& b, bool subtract) {
    const int order = std::min(a.order_, b.order_);
    int lo = std::min(a.c_.empty() ? kExactOrder : a.lead_, b.c_.empty() ? kExactOrder : b.lead_);
    if (lo == kExactOrder) return zero(order);
    int hi = std::max(a.c_.empty() ? lo : a.lead_ + static_cast<int>(a.c_.size()),
                      b.c_.empty() ? lo : b.lead_ + static_cast<int>(b.c_.size()));
    hi = std::min(hi, order);
    std::vector<R> out;
    for (int e = lo; e < hi; ++e) {
      R x = a.coeff_unchecked(e);
      if (subtract) x -= b.coeff_unchecked(e); else x += b.coeff_unchecked(e);
      out.push_back(std::move(x));
    }
    const int lead = out.empty() ? 0 : lo;
    return TruncatedSeries(lead, std::move(out), order);
  }
  R coeff_unchecked(int e) const {
    if (c_.empty() || e < lead_ || e - lead_ >= static_cast<int>(c_.size())) return R{};
    return c_[static_cast<std::size_t>(e - lead_)];
  }
  void normalize() {
    while (!c_.empty() && exact::is_zero(c_.back())) c_.pop_back();
    std::size_t skip = 0;
    while (skip < c_.size() && exact::is_zero(c_[skip])) ++skip;
    if (skip == c_.size()) {
      c_.clear();
      lead_ = order_;
      return;
    }
    if (skip) {
      c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(skip));
      lead_ += static_cast<int>(skip);
    }
  }

  int lead_;
  std::vector<R> c_;
  int order_;
};

// p_n^(alpha) = ((-1)^n / 2) ((alpha+1)/2)^n, the coefficients of
// 1/(2L+alpha+1) = (1/L) sum_n p_n / L^n.
Rational p_coeff(int alpha, int n);

// 1/(2L+alpha+1) as a series in x = 1/L: lead 1, coefficients p_0..p_{n_max}.
TruncatedSeries<Rational> geometric_expansion(int alpha, int n_max);

// A_{alpha,0..n_max}: coefficients of (1 + sum_i args[i-1] z^i)^alpha for an
// integer exponent alpha >= 1.  Missing args are treated as zero.
template <class R>
std::vector<R> potential_polynomials(int alpha, const std::vector<R>& args, int n_max) {
  if (alpha < 1) throw std::invalid_argument("potential_polynomials: exponent must be >= 1");
  if (n_max < 0) return {};
  std::vector<R> base(static_cast<std::size_t>(n_max) + 1);
  base[0] = R(1);
  for (int i = 1; i <= n_max && i <= static_cast<int>(args.size()); ++i) base[i] = args[i - 1];
  const auto s = TruncatedSeries<R>(0, std::move(base), n_max + 1).pow(alpha);
  std::vector<R> out;
  out.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int k = 0; k <= n_max; ++k) out.push_back(s.coeff(k));
  return out;
}

}  // namespace coulomb::exact
