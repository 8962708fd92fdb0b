#ifndef BELLHGM_HGM_HPP
#define BELLHGM_HGM_HPP

#include <cmath>
#include <vector>

#include "bellhgm/pfaffian.hpp"
#include "bellhgm/recurrence.hpp"
#include "bellhgm/special_values.hpp"

namespace bellhgm {

// Integration path for the holonomic gradient method. Two parametrizations:
//  - GfcAlpha: x(t) = gfc indeterminates at alpha = t, t from alpha0 to alpha1;
//  - LogLinear: log x(t) linear between log x0 and log x1, t in [0,1].
// Fixed-step classical RK4 (the reference protocol is 500 steps).
struct IntegrationPath {
  enum class Kind { GfcAlpha, LogLinear };
  Kind kind = Kind::GfcAlpha;
  double alpha0 = -1.0, alpha1 = 0.5;
  std::vector<double> x0, x1;  // LogLinear endpoints
  int steps = 500;
};

namespace detail {

// d(log x_i)/dalpha for the gfc family: 0 for i=1, sum_{j<i} 1/(alpha-j).
inline std::vector<double> gfc_dlogx(double alpha, int m) {
  std::vector<double> c(m, 0.0);
  double acc = 0.0;
  for (int i = 2; i <= m; ++i) {
    acc += 1.0 / (alpha - (i - 1));
    c[i - 1] = acc;
  }
  return c;
}

template <class F>
struct OdeSystem {
  int n, k, width;
  const IntegrationPath& path;

  // coefficient matrix C(t) = sum_i (dlog x_i/dt) P_i(x(t))
  Mat<F> coeff(double t) const {
    std::vector<double> xs(width), cs(width);
    if (path.kind == IntegrationPath::Kind::GfcAlpha) {
      xs = indeterminates_gfc(t, width);
      cs = gfc_dlogx(t, width);
    } else {
      for (int i = 0; i < width; ++i) {
        double l0 = std::log(path.x0[i]), l1 = std::log(path.x1[i]);
        xs[i] = std::exp(l0 + t * (l1 - l0));
        cs[i] = l1 - l0;
      }
    }
    std::vector<F> xf(xs.begin(), xs.end());
    Mat<F> C(n - k, n - k);
    for (int i = 1; i <= width; ++i) {
      if (cs[i - 1] == 0.0) continue;
      C.axpy(F(cs[i - 1]), pfaffian_matrix<F>(i, n, k, xf));
    }
    return C;
  }
};

}  // namespace detail

// Exact Gauss-Manin start vectors in the working precision, as (unit vector,
// log scale). The gfc path starts these at alpha = -1 (all-ones point) or
// alpha = 1/2 (half-rising point), where every component has a closed form;
// seeding at full working precision matters because parasite solutions of the
// Pfaffian system can amplify initial error by many orders along the path.
template <class F>
std::pair<std::vector<F>, F> gauss_manin_start_gfc(int n, int k, double alpha0) {
  using tr = float_traits<F>;
  auto lbinom = [](int a, int b) {
    return tr::lgamma(F(a + 1)) - tr::lgamma(F(b + 1)) - tr::lgamma(F(a - b + 1));
  };
  std::vector<F> lq(n - k, F(0));
  bool have = false;
  if (alpha0 == -1.0) {  // x = ones: Z_{a,b} = C(a-1,b-1)/b!
    lq[0] = lbinom(n - 1, k - 1) - tr::lgamma(F(k + 1));
    for (int m = 2; m <= n - k; ++m)
      lq[m - 1] = (n - m - 2 >= k - 2 && k >= 2)
                      ? lbinom(n - m - 2, k - 2) - tr::lgamma(F(k))
                      : F(-1e30);
    have = true;
  } else if (alpha0 == 0.5) {
    // Z_{a,b} = (2a-b-1)! / (2^{2(a-b)} a! (a-b)! (b-1)!), x_{m+1} multiplies in
    auto lz = [&](int a, int b) {
      return tr::lgamma(F(2 * a - b)) - F(2 * (a - b)) * tr::log(F(2)) -
             tr::lgamma(F(a + 1)) - tr::lgamma(F(a - b + 1)) - tr::lgamma(F(b));
    };
    auto xs = indeterminates_gfc(0.5, n - k + 1);
    lq[0] = lz(n, k);
    for (int m = 2; m <= n - k; ++m)
      lq[m - 1] = (n - m - 1 >= k - 1 && k >= 2)
                      ? tr::log(F(xs[m])) + lz(n - m - 1, k - 1)
                      : F(-1e30);
    have = true;
  }
  if (!have) throw std::domain_error("gauss_manin_start_gfc: closed forms at alpha0 = -1, 1/2");
  F mx = lq[0];
  for (const F& v : lq) mx = std::max<F>(mx, v);
  std::vector<F> q(n - k);
  for (int i = 0; i < n - k; ++i) q[i] = tr::exp(lq[i] - mx);
  return {std::move(q), mx};
}

// Integrate the Pfaffian system dQ = sum_i (dx_i/x_i) P_i Q along the path,
// starting from the state (q, log_scale) given in the working precision. The
// state is renormalized to unit max-norm each step with the log scale
// accumulated; a growth of more than 10^3 in one step reports a step-size
// failure.
template <class F>
GaussManinVector hgm_integrate_f(const PartitionSpec& spec, const IntegrationPath& path,
                                 std::vector<F> q, F log_scale) {
  using tr = float_traits<F>;
  if (spec.n < spec.k + 2) throw std::domain_error("hgm_integrate: need n >= k+2");
  if (path.steps < 1) throw std::domain_error("hgm_integrate: need steps >= 1");
  int d = spec.n - spec.k;
  detail::OdeSystem<F> sys{spec.n, spec.k, spec.width(), path};

  double t0, t1;
  if (path.kind == IntegrationPath::Kind::GfcAlpha) {
    t0 = path.alpha0;
    t1 = path.alpha1;
  } else {
    t0 = 0.0;
    t1 = 1.0;
  }

  double h = (t1 != t0) ? (t1 - t0) / path.steps : 0.0;
  std::vector<F> k1(d), k2(d), k3(d), k4(d), tmp(d);
  for (int s = 0; s < path.steps && h != 0.0; ++s) {
    double t = t0 + s * h;
    Mat<F> c1 = sys.coeff(t);
    Mat<F> c2 = sys.coeff(t + h / 2);
    Mat<F> c4 = sys.coeff(t + h);
    k1 = c1 * q;
    for (int i = 0; i < d; ++i) tmp[i] = q[i] + F(h / 2) * k1[i];
    k2 = c2 * tmp;
    for (int i = 0; i < d; ++i) tmp[i] = q[i] + F(h / 2) * k2[i];
    k3 = c2 * tmp;
    for (int i = 0; i < d; ++i) tmp[i] = q[i] + F(h) * k3[i];
    k4 = c4 * tmp;
    for (int i = 0; i < d; ++i)
      q[i] += F(h / 6) * (k1[i] + F(2) * k2[i] + F(2) * k3[i] + k4[i]);

    F mx(0);
    for (int i = 0; i < d; ++i) mx = std::max<F>(mx, tr::fabs(q[i]));
    if (!(mx > F(0))) throw numeric_error("hgm_integrate: state collapsed to zero");
    if (mx > F(1e3))
      throw numeric_error("hgm_integrate: relative growth > 1e3 in one step (near singular locus?)");
    for (int i = 0; i < d; ++i) q[i] /= mx;
    log_scale += tr::log(mx);
  }
  GaussManinVector out;
  out.unit.assign(d, 0.0);
  for (int i = 0; i < d; ++i) out.unit[i] = static_cast<double>(q[i]);
  out.log_scale = static_cast<double>(log_scale);
  return out;
}

template <class F>
GaussManinVector hgm_integrate_t(const PartitionSpec& spec, const IntegrationPath& path,
                                 const GaussManinVector& q0) {
  std::vector<F> q(q0.unit.begin(), q0.unit.end());
  return hgm_integrate_f<F>(spec, path, std::move(q), F(q0.log_scale));
}

// Precision-dispatched front end.
GaussManinVector hgm_integrate(const PartitionSpec& spec, const IntegrationPath& path,
                               const GaussManinVector& q0,
                               Precision prec = Precision::LongDouble);

// Convenience: gfc path from alpha0 (default -1, the exact Lah start) to
// alpha1, with the initial vector taken from closed forms / recurrence.
GaussManinVector hgm_gfc(const PartitionSpec& spec, double alpha0, double alpha1, int steps,
                         Precision prec = Precision::LongDouble);

}  // namespace bellhgm

#endif
