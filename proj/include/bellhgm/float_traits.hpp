#ifndef BELLHGM_FLOAT_TRAITS_HPP
#define BELLHGM_FLOAT_TRAITS_HPP

#include <cmath>

#ifdef BELLHGM_HAVE_QUAD
#include <quadmath.h>
#endif

namespace bellhgm {

// Evaluation precision for the Pfaffian-based methods. The reference protocol
// is quadruple precision; double and extended are kept for experiments and
// speed/accuracy comparisons.
enum class Precision { Double, LongDouble, Quad };

template <class F>
struct float_traits;

template <>
struct float_traits<double> {
  static double log(double v) { return std::log(v); }
  static double exp(double v) { return std::exp(v); }
  static double fabs(double v) { return std::fabs(v); }
  static double ldexp(double v, int e) { return std::ldexp(v, e); }
  static int ilogb(double v) { return std::ilogb(v); }
  static double lgamma(double v) { return ::lgamma(v); }
  static constexpr const char* name = "double";
};

template <>
struct float_traits<long double> {
  static long double log(long double v) { return std::log(v); }
  static long double exp(long double v) { return std::exp(v); }
  static long double fabs(long double v) { return std::fabs(v); }
  static long double ldexp(long double v, int e) { return std::ldexp(v, e); }
  static int ilogb(long double v) { return std::ilogb(v); }
  static long double lgamma(long double v) { return ::lgammal(v); }
  static constexpr const char* name = "longdouble";
};

#ifdef BELLHGM_HAVE_QUAD
template <>
struct float_traits<__float128> {
  static __float128 log(__float128 v) { return logq(v); }
  static __float128 exp(__float128 v) { return expq(v); }
  static __float128 fabs(__float128 v) { return fabsq(v); }
  static __float128 ldexp(__float128 v, int e) { return ldexpq(v, e); }
  static int ilogb(__float128 v) { return ilogbq(v); }
  static __float128 lgamma(__float128 v) { return lgammaq(v); }
  static constexpr const char* name = "quad";
};
using quad_float = __float128;
#else
using quad_float = long double;
#endif

}  // namespace bellhgm

#endif
