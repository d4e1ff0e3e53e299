#include "coulomb/exact.hpp"

#include <cctype>
#include <cmath>

namespace coulomb::exact {

Rational::Rational(long num, long den) : v_(num, den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) {
  if (sgn(v_.get_den()) == 0) throw std::domain_error("Rational: zero denominator");
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::from_double(double x) {
  if (!std::isfinite(x)) throw std::domain_error("Rational: non-finite double");
  return Rational(mpq_class(x));
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  auto bad = [&]() { return std::invalid_argument("Rational: cannot parse '" + s + "'"); };
  if (s.empty()) throw bad();

  if (const auto slash = s.find('/'); slash != std::string::npos) {
    mpz_class num, den;
    if (num.set_str(s.substr(0, slash), 10) != 0 || den.set_str(s.substr(slash + 1), 10) != 0) throw bad();
    if (sgn(den) == 0) throw std::domain_error("Rational: zero denominator");
    return Rational(mpq_class(num, den));
  }

  // decimal literal: [sign] digits [. digits] [e|E [sign] digits]
  std::size_t i = 0;
  bool negative = false;
  if (s[i] == '+' || s[i] == '-') negative = s[i++] == '-';
  std::string digits;
  long scale = 0;
  bool any = false;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) { digits += s[i++]; any = true; }
  if (i < s.size() && s[i] == '.') {
    ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) { digits += s[i++]; --scale; any = true; }
  }
  if (!any) throw bad();
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    std::size_t used = 0;
    long e = 0;
    try { e = std::stol(s.substr(i), &used); } catch (const std::exception&) { throw bad(); }
    if (used == 0) throw bad();
    i += used;
    scale += e;
  }
  if (i != s.size()) throw bad();

  mpz_class mant(digits, 10);
  if (negative) mant = -mant;
  mpz_class ten_pow;
  mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
  return scale >= 0 ? Rational(mpq_class(mant * ten_pow)) : Rational(mpq_class(mant, ten_pow));
}

Rational pow(const Rational& base, int exponent) {
  if (exponent < 0) return Rational(1) / pow(base, -exponent);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get().get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.get().get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(mpq_class(num, den));
}

QSqrt2& QSqrt2::operator*=(const QSqrt2& o) {
  Rational a = a_ * o.a_ + Rational(2) * b_ * o.b_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

QSqrt2 QSqrt2::inverse() const {
  const Rational n = norm();  // zero only for the zero element, sqrt 2 being irrational
  if (n.is_zero()) throw std::domain_error("QSqrt2: inverse of zero");
  return {a_ / n, -b_ / n};
}

double QSqrt2::to_double() const {
  // Evaluate via the conjugate when a and b*sqrt2 nearly cancel.
  const double a = a_.to_double();
  const double b = b_.to_double() * std::sqrt(2.0);
  if (a != 0.0 && b != 0.0 && (a > 0) != (b > 0) && std::abs(a + b) < 0.5 * std::abs(a)) {
    return norm().to_double() / (a - b);
  }
  return a + b;
}

std::string QSqrt2::str() const {
  std::string out;
  detail::append_terms(out, *this, "");
  return out.empty() ? "0" : out;
}

namespace detail {

void append_term(std::string& out, const Rational& coef, const std::string& monomial) {
  if (coef.is_zero()) return;
  const bool negative = coef.sign() < 0;
  const Rational mag = coef.abs();
  std::string body;
  if (monomial.empty()) {
    body = mag.str();
  } else if (mag == Rational(1)) {
    body = monomial;
  } else if (monomial == "sqrt2" && !mag.is_integer()) {
    const std::string den = mag.denominator().get_str();
    body = mag.numerator() == 1 ? "sqrt2/" + den : mag.numerator().get_str() + "*sqrt2/" + den;
  } else {
    body = mag.str() + "*" + monomial;
  }
  if (out.empty()) {
    out = negative ? "-" + body : body;
  } else {
    out += negative ? " - " : " + ";
    out += body;
  }
}

void append_terms(std::string& out, const Rational& coef, const std::string& monomial) {
  append_term(out, coef, monomial);
}

void append_terms(std::string& out, const QSqrt2& coef, const std::string& monomial) {
  append_term(out, coef.b(), monomial.empty() ? "sqrt2" : "sqrt2*" + monomial);
  append_term(out, coef.a(), monomial);
}

void append_terms(std::string& out, double coef, const std::string& monomial) {
  if (coef == 0.0) return;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", std::abs(coef));
  std::string body = monomial.empty() ? buf : std::string(buf) + "*" + monomial;
  if (out.empty()) {
    out = coef < 0 ? "-" + body : body;
  } else {
    out += coef < 0 ? " - " : " + ";
    out += body;
  }
}

}  // namespace detail

Rational p_coeff(int alpha, int n) {
  if (alpha < 1) throw std::invalid_argument("p_coeff: alpha must be >= 1");
  if (n < 0) throw std::invalid_argument("p_coeff: n must be >= 0");
  Rational v = pow(Rational(alpha + 1, 2), n) / Rational(2);
  return n % 2 ? -v : v;
}

TruncatedSeries<Rational> geometric_expansion(int alpha, int n_max) {
  if (n_max < 0) throw std::invalid_argument("geometric_expansion: n_max must be >= 0");
  std::vector<Rational> c;
  c.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) c.push_back(p_coeff(alpha, n));
  return TruncatedSeries<Rational>(1, std::move(c), n_max + 2);
}

}  // namespace coulomb::exact
