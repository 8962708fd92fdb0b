#include "bellhgm/special_values.hpp"

#include <cmath>
#include <stdexcept>

namespace bellhgm {

namespace {

SignedLog stirling_triangle(int n, int k, bool second_kind) {
  if (n == 0 && k == 0) return SignedLog::one();
  if (n <= 0 || k <= 0 || k > n) return SignedLog::zero();
  // rows kap = 1..k, window m = kap..kap+(n-k)
  int nk = n - k;
  std::vector<SignedLog> prev(nk + 1), cur(nk + 1);
  // row kap=1: |s(m,1)| = (m-1)!, S(m,1) = 1
  for (int d = 0; d <= nk; ++d) {
    int m = 1 + d;
    prev[d] = second_kind ? SignedLog::one() : SignedLog::from_log(std::lgamma(m));
  }
  for (int kap = 2; kap <= k; ++kap) {
    for (int d = 0; d <= nk; ++d) {
      int m = kap + d;
      // T(m,kap) = T(m-1,kap-1) + c(m-1,kap) * T(m-1,kap)
      SignedLog t = prev[d];  // (m-1, kap-1)
      if (d >= 1) {
        double c = second_kind ? kap : m - 1;
        t += cur[d - 1] * SignedLog::from_double(c);
      }
      cur[d] = t;
    }
    std::swap(prev, cur);
  }
  return prev[nk];
}

}  // namespace

SignedLog stirling1_unsigned(int n, int k) { return stirling_triangle(n, k, false); }
SignedLog stirling2(int n, int k) { return stirling_triangle(n, k, true); }

SignedLog special_value(SpecialPoint point, int n, int k) {
  if (n < k || k < 1) throw std::domain_error("special_value: need n >= k >= 1");
  double lg = 0;
  switch (point) {
    case SpecialPoint::Ones:
      lg = std::lgamma(n) - std::lgamma(k) - std::lgamma(n - k + 1) - std::lgamma(k + 1);
      return SignedLog::from_log(lg);
    case SpecialPoint::HalfRising:
      lg = std::lgamma(2.0 * n - k) - 2.0 * (n - k) * std::log(2.0) - std::lgamma(n + 1.0) -
           std::lgamma(n - k + 1.0) - std::lgamma(static_cast<double>(k));
      return SignedLog::from_log(lg);
    case SpecialPoint::Inv:
      return stirling1_unsigned(n, k) / SignedLog::from_log(std::lgamma(n + 1.0));
    case SpecialPoint::InvFactorial:
      return stirling2(n, k) / SignedLog::from_log(std::lgamma(n + 1.0));
  }
  throw std::domain_error("special_value: unknown point");
}

SignedLog special_value_gfc(double alpha, int n, int k) {
  if (alpha == -1.0) return special_value(SpecialPoint::Ones, n, k);
  if (alpha == 0.5) return special_value(SpecialPoint::HalfRising, n, k);
  throw std::domain_error("special_value_gfc: closed form only at alpha = -1 or 1/2");
}

std::vector<double> indeterminates_ones(int m) { return std::vector<double>(m, 1.0); }

std::vector<double> indeterminates_inv(int m) {
  std::vector<double> x(m);
  for (int i = 1; i <= m; ++i) x[i - 1] = 1.0 / i;
  return x;
}

std::vector<double> indeterminates_inv_factorial(int m) {
  std::vector<double> x(m);
  double f = 1;
  for (int i = 1; i <= m; ++i) {
    f *= i;
    x[i - 1] = 1.0 / f;
  }
  return x;
}

std::vector<double> log_indeterminates_gfc(double alpha, int m) {
  if (alpha >= 1.0) throw std::domain_error("gfc family needs alpha < 1");
  // x_1 = 1 and x_i/x_{i-1} = (i-1-alpha)/i
  std::vector<double> lx(m, 0.0);
  double acc = 0.0;
  for (int i = 2; i <= m; ++i) {
    acc += std::log(i - 1.0 - alpha) - std::log(static_cast<double>(i));
    lx[i - 1] = acc;
  }
  return lx;
}

std::vector<double> indeterminates_gfc(double alpha, int m) {
  auto lx = log_indeterminates_gfc(alpha, m);
  std::vector<double> x(m);
  for (int i = 0; i < m; ++i) x[i] = std::exp(lx[i]);
  return x;
}

}  // namespace bellhgm
