#ifndef MANDELROOTS_DD_HPP
#define MANDELROOTS_DD_HPP

// Double-double scalar: an unevaluated sum hi + lo of two doubles with
// |lo| <= ulp(hi)/2, giving ~31 decimal digits. Algorithms follow the
// classical error-free transforms (Dekker/Knuth) and the QD library's
// division, sqrt, exp and log schemes. Requires strict IEEE double
// arithmetic: do not compile this header with -ffast-math.

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

namespace mandelroots {

namespace detail {

inline double two_sum(double a, double b, double& err) {
  double s = a + b;
  double bb = s - a;
  err = (a - (s - bb)) + (b - bb);
  return s;
}

// Requires |a| >= |b|.
inline double quick_two_sum(double a, double b, double& err) {
  double s = a + b;
  err = b - (s - a);
  return s;
}

inline double two_prod(double a, double b, double& err) {
  double p = a * b;
  err = std::fma(a, b, -p);
  return p;
}

}  // namespace detail

struct DoubleDouble {
  double hi{0.0};
  double lo{0.0};

  constexpr DoubleDouble() = default;
  constexpr DoubleDouble(double h) : hi(h), lo(0.0) {}
  constexpr DoubleDouble(double h, double l) : hi(h), lo(l) {}

  static constexpr DoubleDouble eps() { return DoubleDouble(4.930380657631324e-32); }  // 2^-104
  static constexpr DoubleDouble pi() {
    return DoubleDouble(3.141592653589793, 1.2246467991473532e-16);
  }
  static constexpr DoubleDouble ln2() {
    return DoubleDouble(0.6931471805599453, 2.3190468138462996e-17);
  }
};

using dd = DoubleDouble;

inline double to_double(const dd& a) { return a.hi + a.lo; }

inline dd operator-(const dd& a) { return dd(-a.hi, -a.lo); }

inline dd operator+(const dd& a, const dd& b) {
  using namespace detail;
  double e1, e2;
  double s1 = two_sum(a.hi, b.hi, e1);
  double s2 = two_sum(a.lo, b.lo, e2);
  e1 += s2;
  s1 = quick_two_sum(s1, e1, e1);
  e1 += e2;
  s1 = quick_two_sum(s1, e1, e1);
  return dd(s1, e1);
}

inline dd operator+(const dd& a, double b) {
  using namespace detail;
  double e;
  double s = two_sum(a.hi, b, e);
  e += a.lo;
  s = quick_two_sum(s, e, e);
  return dd(s, e);
}

inline dd operator+(double a, const dd& b) { return b + a; }

inline dd operator-(const dd& a, const dd& b) { return a + (-b); }
inline dd operator-(const dd& a, double b) { return a + (-b); }
inline dd operator-(double a, const dd& b) { return (-b) + a; }

inline dd operator*(const dd& a, const dd& b) {
  using namespace detail;
  double e;
  double p = two_prod(a.hi, b.hi, e);
  e += a.hi * b.lo + a.lo * b.hi;
  p = quick_two_sum(p, e, e);
  return dd(p, e);
}

inline dd operator*(const dd& a, double b) {
  using namespace detail;
  double e;
  double p = two_prod(a.hi, b, e);
  e += a.lo * b;
  p = quick_two_sum(p, e, e);
  return dd(p, e);
}

inline dd operator*(double a, const dd& b) { return b * a; }

inline dd operator/(const dd& a, const dd& b) {
  using namespace detail;
  double q1 = a.hi / b.hi;
  dd r = a - b * q1;
  double q2 = r.hi / b.hi;
  r = r - b * q2;
  double q3 = r.hi / b.hi;
  double e;
  double s = quick_two_sum(q1, q2, e);
  return dd(s, e) + q3;
}

inline dd operator/(const dd& a, double b) { return a / dd(b); }
inline dd operator/(double a, const dd& b) { return dd(a) / b; }

inline dd& operator+=(dd& a, const dd& b) { return a = a + b; }
inline dd& operator-=(dd& a, const dd& b) { return a = a - b; }
inline dd& operator*=(dd& a, const dd& b) { return a = a * b; }
inline dd& operator/=(dd& a, const dd& b) { return a = a / b; }

inline bool operator==(const dd& a, const dd& b) { return a.hi == b.hi && a.lo == b.lo; }
inline bool operator!=(const dd& a, const dd& b) { return !(a == b); }
inline bool operator<(const dd& a, const dd& b) {
  return a.hi < b.hi || (a.hi == b.hi && a.lo < b.lo);
}
inline bool operator>(const dd& a, const dd& b) { return b < a; }
inline bool operator<=(const dd& a, const dd& b) { return !(b < a); }
inline bool operator>=(const dd& a, const dd& b) { return !(a < b); }

inline bool isfinite(const dd& a) { return std::isfinite(a.hi); }

inline dd abs(const dd& a) { return a.hi < 0.0 ? -a : a; }

inline dd sqr(const dd& a) {
  using namespace detail;
  double e;
  double p = two_prod(a.hi, a.hi, e);
  e += 2.0 * a.hi * a.lo;
  p = quick_two_sum(p, e, e);
  return dd(p, e);
}

// Exact scaling by a power of two.
inline dd mul_pwr2(const dd& a, double p2) { return dd(a.hi * p2, a.lo * p2); }
inline dd ldexp(const dd& a, int n) { return dd(std::ldexp(a.hi, n), std::ldexp(a.lo, n)); }

inline dd sqrt(const dd& a) {
  if (a.hi == 0.0 && a.lo == 0.0) return dd(0.0);
  if (a.hi < 0.0) return dd(std::numeric_limits<double>::quiet_NaN());
  using namespace detail;
  double x = 1.0 / std::sqrt(a.hi);
  double ax = a.hi * x;
  dd corr = a - sqr(dd(ax));
  double e;
  double s = two_sum(ax, corr.hi * (x * 0.5), e);
  return dd(s, e);
}

inline dd exp(const dd& a) {
  // exp(r*2^-9)^(2^9) * 2^m with r = a - m*ln2 reduced below ln2/2.
  static const double kInvFact[15][2] = {
      {0.16666666666666666, 9.25185853854297e-18},
      {0.041666666666666664, 2.3129646346357427e-18},
      {0.008333333333333333, 1.1564823173178714e-19},
      {0.001388888888888889, -5.300543954373577e-20},
      {0.0001984126984126984, 1.7209558293420705e-22},
      {2.48015873015873e-05, 2.1511947866775882e-23},
      {2.7557319223985893e-06, -1.858393274046472e-22},
      {2.755731922398589e-07, 2.3767714622250297e-23},
      {2.505210838544172e-08, -1.448814070935912e-24},
      {2.08767569878681e-09, -1.20734505911326e-25},
      {1.6059043836821613e-10, 1.2585294588752098e-26},
      {1.1470745597729725e-11, 2.0655512752830745e-28},
      {7.647163731819816e-13, 7.03872877733453e-30},
      {4.779477332387385e-14, 4.399205485834081e-31},
      {2.8114572543455206e-15, 1.6508842730861433e-31}};
  const double k = 512.0;
  const double inv_k = 1.0 / k;
  if (a.hi <= -709.0) return dd(0.0);
  if (a.hi >= 709.0) return dd(std::numeric_limits<double>::infinity());
  if (a.hi == 0.0 && a.lo == 0.0) return dd(1.0);

  double m = std::floor(a.hi / dd::ln2().hi + 0.5);
  dd r = mul_pwr2(a - dd::ln2() * m, inv_k);
  dd p = sqr(r);
  dd s = r + mul_pwr2(p, 0.5);
  p = p * r;
  dd t = p * dd(kInvFact[0][0], kInvFact[0][1]);
  int i = 0;
  do {
    s = s + t;
    p = p * r;
    ++i;
    t = p * dd(kInvFact[i][0], kInvFact[i][1]);
  } while (std::abs(to_double(t)) > inv_k * dd::eps().hi && i < 5);
  s = s + t;

  for (int j = 0; j < 9; ++j) s = mul_pwr2(s, 2.0) + sqr(s);
  s = s + 1.0;
  return ldexp(s, static_cast<int>(m));
}

inline dd log(const dd& a) {
  // One Newton step x += a*exp(-x) - 1 lifts the double log to dd accuracy;
  // a second step guards the last couple of bits.
  if (a.hi == 1.0 && a.lo == 0.0) return dd(0.0);
  if (a.hi <= 0.0) return dd(std::numeric_limits<double>::quiet_NaN());
  dd x(std::log(a.hi));
  x = x + a * exp(-x) - 1.0;
  x = x + a * exp(-x) - 1.0;
  return x;
}

inline dd pow10i(int n) {
  dd r(1.0);
  dd base(10.0);
  int e = n < 0 ? -n : n;
  while (e > 0) {
    if (e & 1) r = r * base;
    base = sqr(base);
    e >>= 1;
  }
  if (n < 0) r = 1.0 / r;
  return r;
}

std::string to_string(const dd& a, int digits = 31);
dd dd_from_string(const std::string& s);

}  // namespace mandelroots

#endif
