#ifndef BELLHGM_SIGNED_LOG_HPP
#define BELLHGM_SIGNED_LOG_HPP

#include <cmath>
#include <limits>
#include <ostream>

namespace bellhgm {

// Signed log-magnitude scalar. Values at n ~ 800 reach e^{-4447}, far below
// the double range, so every production evaluation path carries (sign, log|v|)
// instead of a raw double. Multiplication adds logs; addition goes through
// log-sum-exp anchored at the larger magnitude, which is exact to working
// precision for same-sign operands.
struct SignedLog {
  int sign = 0;  // -1, 0, +1
  double logmag = -std::numeric_limits<double>::infinity();

  SignedLog() = default;
  SignedLog(int s, double lm) : sign(s), logmag(s == 0 ? -std::numeric_limits<double>::infinity() : lm) {}

  static SignedLog zero() { return SignedLog(); }
  static SignedLog one() { return SignedLog(1, 0.0); }

  static SignedLog from_double(double v) {
    if (v == 0.0) return zero();
    return SignedLog(v > 0 ? 1 : -1, std::log(std::fabs(v)));
  }
  static SignedLog from_log(double lm, int s = 1) { return SignedLog(s, lm); }

  bool is_zero() const { return sign == 0; }
  double to_double() const { return sign == 0 ? 0.0 : sign * std::exp(logmag); }

  // log of the value; only meaningful for positive values
  double log() const { return logmag; }

  SignedLog operator*(const SignedLog& o) const {
    if (sign == 0 || o.sign == 0) return zero();
    return SignedLog(sign * o.sign, logmag + o.logmag);
  }
  SignedLog operator/(const SignedLog& o) const {
    return SignedLog(sign * o.sign, logmag - o.logmag);
  }
  SignedLog operator-() const { return SignedLog(-sign, logmag); }

  SignedLog operator+(const SignedLog& o) const {
    if (sign == 0) return o;
    if (o.sign == 0) return *this;
    const SignedLog& big = (logmag >= o.logmag) ? *this : o;
    const SignedLog& sml = (logmag >= o.logmag) ? o : *this;
    double d = sml.logmag - big.logmag;  // <= 0
    if (big.sign == sml.sign) return SignedLog(big.sign, big.logmag + std::log1p(std::exp(d)));
    double t = -std::expm1(d);  // 1 - e^d in (0,1]
    if (t == 0.0) return zero();
    return SignedLog(big.sign, big.logmag + std::log(t));
  }
  SignedLog operator-(const SignedLog& o) const { return *this + (-o); }
  SignedLog& operator+=(const SignedLog& o) { return *this = *this + o; }
  SignedLog& operator*=(const SignedLog& o) { return *this = *this * o; }

  SignedLog pow_int(long long e) const {
    if (e == 0) return one();
    if (sign == 0) return zero();
    int s = (sign < 0 && (e % 2 != 0)) ? -1 : 1;
    return SignedLog(s, logmag * static_cast<double>(e));
  }

  // value-order comparison
  bool operator<(const SignedLog& o) const {
    if (sign != o.sign) return sign < o.sign;
    if (sign == 0) return false;
    return sign > 0 ? logmag < o.logmag : logmag > o.logmag;
  }
};

inline std::ostream& operator<<(std::ostream& os, const SignedLog& v) {
  if (v.sign == 0) return os << "0";
  return os << (v.sign < 0 ? "-exp(" : "exp(") << v.logmag << ")";
}

}  // namespace bellhgm

#endif
