#ifndef BELLHGM_DOUBLE_DOUBLE_HPP
#define BELLHGM_DOUBLE_DOUBLE_HPP

#include <cmath>

#include "bellhgm/float_traits.hpp"

namespace bellhgm {

// Unevaluated double-double sum (~106-bit significand) on hardware doubles.
// Dekker/Knuth error-free transformations; no FMA requirement.
struct DoubleDouble {
  double hi = 0.0, lo = 0.0;

  DoubleDouble() = default;
  DoubleDouble(double h) : hi(h) {}
  DoubleDouble(int v) : hi(v) {}
  DoubleDouble(double h, double l) : hi(h), lo(l) {}
  explicit operator double() const { return hi + lo; }
};

namespace ddops {

inline void two_sum(double a, double b, double& s, double& e) {
  s = a + b;
  double bb = s - a;
  e = (a - (s - bb)) + (b - bb);
}

inline void quick_two_sum(double a, double b, double& s, double& e) {
  s = a + b;
  e = b - (s - a);
}

inline void split(double a, double& hi, double& lo) {
  double t = 134217729.0 * a;  // 2^27 + 1
  hi = t - (t - a);
  lo = a - hi;
}

inline void two_prod(double a, double b, double& p, double& e) {
  p = a * b;
  double ah, al, bh, bl;
  split(a, ah, al);
  split(b, bh, bl);
  e = ((ah * bh - p) + ah * bl + al * bh) + al * bl;
}

}  // namespace ddops

inline DoubleDouble operator+(const DoubleDouble& a, const DoubleDouble& b) {
  double s1, s2, t1, t2;
  ddops::two_sum(a.hi, b.hi, s1, s2);
  ddops::two_sum(a.lo, b.lo, t1, t2);
  s2 += t1;
  ddops::quick_two_sum(s1, s2, s1, s2);
  s2 += t2;
  ddops::quick_two_sum(s1, s2, s1, s2);
  return {s1, s2};
}

inline DoubleDouble operator-(const DoubleDouble& a) { return {-a.hi, -a.lo}; }
inline DoubleDouble operator-(const DoubleDouble& a, const DoubleDouble& b) { return a + (-b); }

inline DoubleDouble operator*(const DoubleDouble& a, const DoubleDouble& b) {
  double p1, p2;
  ddops::two_prod(a.hi, b.hi, p1, p2);
  p2 += a.hi * b.lo + a.lo * b.hi;
  ddops::quick_two_sum(p1, p2, p1, p2);
  return {p1, p2};
}

inline DoubleDouble operator/(const DoubleDouble& a, const DoubleDouble& b) {
  double q1 = a.hi / b.hi;
  DoubleDouble r = a - b * DoubleDouble(q1);
  double q2 = r.hi / b.hi;
  r = r - b * DoubleDouble(q2);
  double q3 = r.hi / b.hi;
  double s, e;
  ddops::quick_two_sum(q1, q2, s, e);
  return DoubleDouble(s, e) + DoubleDouble(q3);
}

inline DoubleDouble& operator+=(DoubleDouble& a, const DoubleDouble& b) { return a = a + b; }
inline DoubleDouble& operator-=(DoubleDouble& a, const DoubleDouble& b) { return a = a - b; }
inline DoubleDouble& operator*=(DoubleDouble& a, const DoubleDouble& b) { return a = a * b; }
inline DoubleDouble& operator/=(DoubleDouble& a, const DoubleDouble& b) { return a = a / b; }

inline bool operator<(const DoubleDouble& a, const DoubleDouble& b) {
  return a.hi < b.hi || (a.hi == b.hi && a.lo < b.lo);
}
inline bool operator>(const DoubleDouble& a, const DoubleDouble& b) { return b < a; }
inline bool operator==(const DoubleDouble& a, const DoubleDouble& b) {
  return a.hi == b.hi && a.lo == b.lo;
}
inline bool operator!=(const DoubleDouble& a, const DoubleDouble& b) { return !(a == b); }
inline bool operator<=(const DoubleDouble& a, const DoubleDouble& b) { return !(b < a); }
inline bool operator>=(const DoubleDouble& a, const DoubleDouble& b) { return !(a < b); }

template <>
struct float_traits<DoubleDouble> {
  static DoubleDouble fabs(const DoubleDouble& v) { return v.hi < 0 ? -v : v; }
  static DoubleDouble ldexp(const DoubleDouble& v, int e) {
    return {std::ldexp(v.hi, e), std::ldexp(v.lo, e)};
  }
  static int ilogb(const DoubleDouble& v) { return std::ilogb(v.hi); }
  // transcendental pieces go through extended precision (used only for scale
  // bookkeeping and path seeds, not in the contiguity arithmetic itself)
  static DoubleDouble log(const DoubleDouble& v) {
    long double l = logl(static_cast<long double>(v.hi) + static_cast<long double>(v.lo));
    double h = static_cast<double>(l);
    return {h, static_cast<double>(l - static_cast<long double>(h))};
  }
  static DoubleDouble exp(const DoubleDouble& v) {
    long double e = expl(static_cast<long double>(v.hi) + static_cast<long double>(v.lo));
    double h = static_cast<double>(e);
    return {h, static_cast<double>(e - static_cast<long double>(h))};
  }
  static DoubleDouble lgamma(const DoubleDouble& v) {
    long double g = lgammal(static_cast<long double>(v.hi) + static_cast<long double>(v.lo));
    double h = static_cast<double>(g);
    return {h, static_cast<double>(g - static_cast<long double>(h))};
  }
  static constexpr const char* name = "doubledouble";
};

}  // namespace bellhgm

#endif
