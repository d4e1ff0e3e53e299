#pragma once

// Minimal complex type usable with any real number type (double, float128,
// cpp_bin_float).  std::complex is only specified for the builtin types.

#include <complex>

namespace coulomb::detail {

template <class R>
struct cx {
  R re{};
  R im{};

  cx() = default;
  cx(R r) : re(std::move(r)) {}  // NOLINT
  cx(R r, R i) : re(std::move(r)), im(std::move(i)) {}
  explicit cx(const std::complex<double>& z) : re(z.real()), im(z.imag()) {}

  cx& operator+=(const cx& o) { re += o.re; im += o.im; return *this; }
  cx& operator-=(const cx& o) { re -= o.re; im -= o.im; return *this; }
  friend cx operator+(cx a, const cx& b) { return a += b; }
  friend cx operator-(cx a, const cx& b) { return a -= b; }
  friend cx operator-(const cx& a) { return {-a.re, -a.im}; }
  friend cx operator*(const cx& a, const cx& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend cx operator*(const cx& a, const R& s) { return {a.re * s, a.im * s}; }
  friend cx operator*(const R& s, const cx& a) { return {a.re * s, a.im * s}; }
  friend cx operator/(const cx& a, const R& s) { return {a.re / s, a.im / s}; }
  friend cx operator/(const cx& a, const cx& b) {
    // Smith's algorithm keeps the intermediate products in range.
    using std::abs;
    if (abs(b.re) >= abs(b.im)) {
      const R q = b.im / b.re;
      const R d = b.re + b.im * q;
      return {(a.re + a.im * q) / d, (a.im - a.re * q) / d};
    }
    const R q = b.re / b.im;
    const R d = b.re * q + b.im;
    return {(a.re * q + a.im) / d, (a.im * q - a.re) / d};
  }
};

template <class R>
R modulus(const cx<R>& z) {
  using std::abs;
  using std::sqrt;
  const R a = abs(z.re), b = abs(z.im);
  if (a == 0) return b;
  if (b == 0) return a;
  if (a > b) {
    const R q = b / a;
    return a * sqrt(1 + q * q);
  }
  const R q = a / b;
  return b * sqrt(1 + q * q);
}

template <class R>
R modulus(const R& x) {
  using std::abs;
  return abs(x);
}

template <class R>
std::complex<double> to_cplx(const cx<R>& z) {
  return {static_cast<double>(z.re), static_cast<double>(z.im)};
}

template <class R>
std::complex<double> to_cplx(const R& x) {
  return {static_cast<double>(x), 0.0};
}

}  // namespace coulomb::detail
