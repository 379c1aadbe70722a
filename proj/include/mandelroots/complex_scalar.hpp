#ifndef MANDELROOTS_COMPLEX_SCALAR_HPP
#define MANDELROOTS_COMPLEX_SCALAR_HPP

// Maps a real scalar type onto its complex companion. The numeric kernels
// are written against the shared subset: (re, im) construction, real()/
// imag(), arithmetic operators and unqualified abs/norm/conj found by ADL.

#include <cmath>
#include <complex>

#include "mandelroots/dd.hpp"

namespace mandelroots {

struct DDComplex {
  dd re_{}, im_{};

  constexpr DDComplex() = default;
  constexpr DDComplex(const dd& r) : re_(r) {}
  constexpr DDComplex(const dd& r, const dd& i) : re_(r), im_(i) {}
  explicit DDComplex(const std::complex<double>& z) : re_(z.real()), im_(z.imag()) {}

  const dd& real() const { return re_; }
  const dd& imag() const { return im_; }
};

inline DDComplex operator-(const DDComplex& a) { return {-a.re_, -a.im_}; }
inline DDComplex operator+(const DDComplex& a, const DDComplex& b) {
  return {a.re_ + b.re_, a.im_ + b.im_};
}
inline DDComplex operator-(const DDComplex& a, const DDComplex& b) {
  return {a.re_ - b.re_, a.im_ - b.im_};
}
inline DDComplex operator*(const DDComplex& a, const DDComplex& b) {
  return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
}
inline DDComplex operator*(const DDComplex& a, const dd& s) { return {a.re_ * s, a.im_ * s}; }
inline DDComplex operator*(const dd& s, const DDComplex& a) { return a * s; }
inline DDComplex operator/(const DDComplex& a, const dd& s) { return {a.re_ / s, a.im_ / s}; }
inline DDComplex operator/(const DDComplex& a, const DDComplex& b) {
  dd nb = sqr(b.re_) + sqr(b.im_);
  return {(a.re_ * b.re_ + a.im_ * b.im_) / nb, (a.im_ * b.re_ - a.re_ * b.im_) / nb};
}
inline DDComplex& operator+=(DDComplex& a, const DDComplex& b) { return a = a + b; }
inline DDComplex& operator-=(DDComplex& a, const DDComplex& b) { return a = a - b; }
inline DDComplex& operator*=(DDComplex& a, const DDComplex& b) { return a = a * b; }
inline bool operator==(const DDComplex& a, const DDComplex& b) {
  return a.re_ == b.re_ && a.im_ == b.im_;
}

inline dd norm(const DDComplex& a) { return sqr(a.re_) + sqr(a.im_); }

inline DDComplex conj(const DDComplex& a) { return {a.re_, -a.im_}; }

inline dd abs(const DDComplex& a) {
  // Rescale by a power of two when components are large enough to square
  // into the overflow range.
  double m = std::max(std::abs(a.re_.hi), std::abs(a.im_.hi));
  if (m > 1e150) {
    DDComplex s{ldexp(a.re_, -540), ldexp(a.im_, -540)};
    return ldexp(sqrt(norm(s)), 540);
  }
  return sqrt(norm(a));
}

inline bool isfinite(const DDComplex& a) { return isfinite(a.re_) && isfinite(a.im_); }

inline std::complex<double> to_std(const DDComplex& z) {
  return {to_double(z.re_), to_double(z.im_)};
}

template <class S>
struct complex_for;

template <>
struct complex_for<double> {
  using type = std::complex<double>;
};

template <>
struct complex_for<DoubleDouble> {
  using type = DDComplex;
};

template <class S>
using complex_t = typename complex_for<S>::type;

// Scalar conversions shared by the templated kernels.
inline double to_double(double x) { return x; }
inline bool isfinite(double x) { return std::isfinite(x); }

template <class S>
inline complex_t<S> to_complex(const std::complex<double>& z) {
  if constexpr (std::is_same_v<S, double>)
    return z;
  else
    return DDComplex(z);
}

inline std::complex<double> to_std(const std::complex<double>& z) { return z; }

}  // namespace mandelroots

#endif
