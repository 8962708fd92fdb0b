#include "bellhgm/asymptotics.hpp"

#include <algorithm>
#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <stdexcept>
#include <string>

#include "bellhgm/errors.hpp"
#include "bellhgm/odds.hpp"

namespace bellhgm {

namespace {

// c = Abar^T (Abar Abar^T)^{-1} log y, with Abar rows i e1 - (i+1) e2 + e_{i+2}.
// Solved by Cholesky on the (n-k-1) x (n-k-1) Gram matrix.
std::vector<double> gale_lift(int width, const std::vector<double>& logy) {
  int r = width - 2;
  std::vector<std::vector<double>> G(r, std::vector<double>(r, 0.0));
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= r; ++j) {
      double g = static_cast<double>(i) * j + static_cast<double>(i + 1) * (j + 1);
      if (i == j) g += 1.0;
      G[i - 1][j - 1] = g;
    }
  // Cholesky
  std::vector<std::vector<double>> L(r, std::vector<double>(r, 0.0));
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j <= i; ++j) {
      double s = G[i][j];
      for (int t = 0; t < j; ++t) s -= L[i][t] * L[j][t];
      if (i == j) {
        if (s <= 0) throw numeric_error("gale_lift: Gram matrix not positive definite");
        L[i][i] = std::sqrt(s);
      } else {
        L[i][j] = s / L[j][j];
      }
    }
  }
  std::vector<double> u(logy);
  for (int i = 0; i < r; ++i) {
    for (int t = 0; t < i; ++t) u[i] -= L[i][t] * u[t];
    u[i] /= L[i][i];
  }
  for (int i = r - 1; i >= 0; --i) {
    for (int t = i + 1; t < r; ++t) u[i] -= L[t][i] * u[t];
    u[i] /= L[i][i];
  }
  // c = Abar^T u
  std::vector<double> c(width, 0.0);
  for (int i = 1; i <= r; ++i) {
    c[0] += i * u[i - 1];
    c[1] += -(i + 1.0) * u[i - 1];
    c[i + 1] += u[i - 1];
  }
  return c;
}

}  // namespace

LogAffineFit ips_fit(const PartitionSpec& spec, const std::vector<double>& y, double tol,
                     int max_iter) {
  int width = spec.width();
  if (width < 3) throw std::domain_error("ips_fit: need n >= k+2");
  if (static_cast<int>(y.size()) != width - 2)
    throw std::domain_error("ips_fit: y must have length n-k-1");
  std::vector<double> logy(width - 2);
  for (int i = 0; i < width - 2; ++i) {
    if (!(y[i] > 0)) throw std::domain_error("ips_fit: y must be strictly positive");
    logy[i] = std::log(y[i]);
  }
  std::vector<double> c = gale_lift(width, logy);
  double b1 = spec.n - spec.k, b2 = spec.k;
  double th1 = 0.0, th2 = 0.0;

  auto xs = [&](double t1, double t2) {
    std::vector<double> x(width);
    for (int i = 0; i < width; ++i) x[i] = std::exp(c[i] + i * t1 + t2);
    return x;
  };

  int it = 0;
  for (; it < max_iter; ++it) {
    std::vector<double> x = xs(th1, th2);
    double s0 = 0, s1 = 0;
    for (int i = 0; i < width; ++i) {
      s0 += x[i];
      s1 += i * x[i];
    }
    if (std::fabs(s0 - b2) + std::fabs(s1 - b1) < tol) break;
    // scale to match sum x = k exactly
    th2 += std::log(b2 / s0);
    // one guarded Newton step in theta1 on f(t) = sum (i) x_i(t) - b1
    x = xs(th1, th2);
    double f = 0, df = 0;
    for (int i = 0; i < width; ++i) {
      f += i * x[i];
      df += static_cast<double>(i) * i * x[i];
    }
    f -= b1;
    if (df > 0) {
      double step = -f / df;
      step = std::clamp(step, -1.0, 1.0);
      th1 += step;
    }
  }
  if (it >= max_iter) throw numeric_error("ips_fit: no convergence after max iterations");

  LogAffineFit fit;
  fit.m = xs(th1, th2);
  fit.theta = {th1, th2};
  fit.y.assign(y.begin(), y.end());
  fit.iterations = it;
  return fit;
}

double gaussian_approx_logZ(const PartitionSpec& spec, const std::vector<double>& x_reduced,
                            double gamma, IpsDetMode det) {
  if (spec.restricted()) throw std::domain_error("gaussian_approx_logZ: unrestricted only");
  double g = gamma;
  if (!(g > 0)) throw std::domain_error("gaussian_approx_logZ: gamma must be positive");
  double nr_d = spec.n / g, kr_d = spec.k / g;
  int nr = static_cast<int>(std::lround(nr_d)), kr = static_cast<int>(std::lround(kr_d));
  if (std::fabs(nr_d - nr) > 1e-9 || std::fabs(kr_d - kr) > 1e-9)
    throw std::domain_error("gaussian_approx_logZ: (n,k) must be divisible by gamma");
  if (nr < kr + 2) throw std::domain_error("gaussian_approx_logZ: reduced n >= k+2 required");
  int width = nr - kr + 1;
  if (static_cast<int>(x_reduced.size()) != width)
    throw std::domain_error("gaussian_approx_logZ: x must have the reduced width n/g - k/g + 1");

  PartitionSpec red(nr, kr);
  std::vector<double> y = odds_from_x(x_reduced);
  LogAffineFit fit = ips_fit(red, y);

  double mlogx = 0, lg = 0;
  for (int i = 0; i < width; ++i) {
    mlogx += fit.m[i] * std::log(x_reduced[i]);
    lg += std::lgamma(g * fit.m[i] + 1.0);
  }

  double D;
  if (det == IpsDetMode::Calibrated && nr == 4 && kr == 2) {
    D = 4.0 + 5.0 * std::sqrt(y[0]);
  } else {
    // det(Abar M^{-1} Abar^T)
    int r = width - 2;
    std::vector<std::vector<double>> M(r, std::vector<double>(r, 0.0));
    auto abar = [&](int row, int col) -> double {
      if (col == 0) return row + 1.0;
      if (col == 1) return -(row + 2.0);
      return col == row + 2 ? 1.0 : 0.0;
    };
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) {
        double s = 0;
        for (int t = 0; t < width; ++t) s += abar(i, t) * abar(j, t) / fit.m[t];
        M[i][j] = s;
      }
    // log-det by Cholesky
    double logdet = 0;
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j <= i; ++j) {
        double s = M[i][j];
        for (int t = 0; t < j; ++t) s -= M[i][t] * M[j][t];
        if (i == j) {
          if (s <= 0) throw numeric_error("gaussian_approx_logZ: det factor not positive");
          M[i][i] = std::sqrt(s);
          logdet += 2 * std::log(M[i][i]);
        } else {
          M[i][j] = s / M[j][j];
        }
      }
    }
    return g * mlogx - lg + (nr - kr - 1) * std::log(2 * M_PI * g) - 0.5 * logdet;
  }
  return g * mlogx - lg + (nr - kr - 1) * std::log(2 * M_PI * g) - 0.5 * std::log(D);
}

double mittag_leffler_pdf(double alpha, double u) {
  if (!(alpha > 0 && alpha < 1)) throw std::domain_error("mittag_leffler_pdf: need 0 < alpha < 1");
  if (!(u > 0)) throw std::domain_error("mittag_leffler_pdf: need u > 0");
  // g_a(u) = (1/(pi a)) sum_{i>=1} (-u)^{i-1}/i! Gamma(a i + 1) sin(pi a i).
  // The alternating terms grow to ~exp(u^2/2 ...) before decaying, so the sum
  // runs in 100-digit floats; the result can be ~60 orders below the largest
  // term (u ~ 14 at the n = 800 grid point).
  const int cap = 500;
  if (u <= 5.0 && alpha <= 0.8) {
    // term growth stays within a few orders; extended precision suffices
    long double sum = 0.0L, lu = logl(static_cast<long double>(u));
    int settled = 0;
    for (int i = 1; i <= cap; ++i) {
      long double lt = (i - 1) * lu + lgammal(alpha * static_cast<long double>(i) + 1.0L) -
                       lgammal(static_cast<long double>(i) + 1.0L);
      long double term = expl(lt) * sinl(M_PIl * alpha * i);
      if (i % 2 == 0) term = -term;
      sum += term;
      if (fabsl(term) < 1e-15L * std::max(1e-300L, fabsl(sum))) {
        if (++settled >= 3) break;
      } else {
        settled = 0;
      }
      if (i == cap)
        throw numeric_error("mittag_leffler_pdf: series did not settle within 500 terms");
    }
    return static_cast<double>(sum / (M_PIl * alpha));
  }
  using BF = boost::multiprecision::cpp_bin_float_100;
  const BF pi = boost::math::constants::pi<BF>();
  BF sum = 0, ufac = 1, ifac = 1;
  const BF ub(u), ab(alpha);
  int settled = 0;
  for (int i = 1; i <= cap; ++i) {
    ifac *= i;
    BF term = ufac / ifac * boost::multiprecision::tgamma(ab * i + 1) *
              boost::multiprecision::sin(pi * ab * i);
    if (i % 2 == 0) term = -term;
    sum += term;
    ufac *= ub;
    if (boost::multiprecision::fabs(term) <
        BF(1e-15) * std::max(BF(1e-300), boost::multiprecision::fabs(sum))) {
      if (++settled >= 3) break;
    } else {
      settled = 0;
    }
    if (i == cap)
      throw numeric_error("mittag_leffler_pdf: series did not settle within 500 terms");
  }
  return static_cast<double>(sum / (pi * ab));
}

double gfc_asymptotic_logZ(int n, int k, double alpha, GfcAsymptoticForm form) {
  if (n < k || k < 1) throw std::domain_error("gfc_asymptotic_logZ: need n >= k >= 1");
  switch (form) {
    case GfcAsymptoticForm::FixedKPos:
      if (!(alpha > 0)) throw std::domain_error("FixedKPos needs alpha > 0");
      return (-1.0 - alpha) * std::log(n) - std::lgamma(static_cast<double>(k)) -
             (k - 1) * std::log(alpha) - std::lgamma(1.0 - alpha);
    case GfcAsymptoticForm::FixedKNeg:
      if (!(alpha < 0)) throw std::domain_error("FixedKNeg needs alpha < 0");
      return (-1.0 - k * alpha) * std::log(n) - std::lgamma(static_cast<double>(k)) -
             (k - 1) * std::log(-alpha) - std::lgamma(1.0 - k * alpha);
    case GfcAsymptoticForm::MittagLeffler: {
      if (!(alpha > 0 && alpha < 1)) throw std::domain_error("MittagLeffler needs 0 < alpha < 1");
      double u = k / std::pow(static_cast<double>(n), alpha);
      double gval = mittag_leffler_pdf(alpha, u);
      if (!(gval > 0)) throw numeric_error("gfc_asymptotic_logZ: nonpositive density value");
      return (-1.0 - alpha) * std::log(n) - std::lgamma(static_cast<double>(k)) -
             (k - 1) * std::log(alpha) + std::log(gval);
    }
  }
  throw std::domain_error("gfc_asymptotic_logZ: unknown form");
}

}  // namespace bellhgm
