#include <cmath>

#include "bellhgm/dhgm.hpp"
#include "bellhgm/hgm.hpp"
#include "bellhgm/pfaffian.hpp"

namespace bellhgm {

double gfc_ptilde_inverse_entry(int i, int n, double alpha, int l, int m) {
  // (-1)^l (n-m-1) [m+1]_{l+i} / ((l+1)! i!) * (alpha-1)/(m-alpha)
  //   * (alpha-l)_{m-i} / (i-alpha)_{m-i}
  double v = (l % 2 == 0) ? 1.0 : -1.0;
  v *= (n - m - 1);
  for (int t = 0; t < l + i; ++t) v *= (m + 1 - t);
  v /= std::tgamma(l + 2.0) * std::tgamma(i + 1.0);
  v *= (alpha - 1.0) / (m - alpha);
  for (int t = 0; t < m - i; ++t) v *= (alpha - l + t) / (i - alpha + t);
  return v;
}

PfaffianSet pfaffian_set(const PartitionSpec& spec, const std::vector<double>& x) {
  if (spec.n < spec.k + 2) throw std::domain_error("pfaffian_set: need n >= k+2");
  for (double v : x)
    if (!(v > 0)) throw std::domain_error("pfaffian_set: x must be strictly positive");
  PfaffianSet out;
  out.n = spec.n;
  out.k = spec.k;
  out.P = pfaffian_matrices<double>(spec.n, spec.k, x);
  return out;
}

GaussManinVector hgm_integrate(const PartitionSpec& spec, const IntegrationPath& path,
                               const GaussManinVector& q0, Precision prec) {
  switch (prec) {
    case Precision::Double:
      return hgm_integrate_t<double>(spec, path, q0);
    case Precision::LongDouble:
      return hgm_integrate_t<long double>(spec, path, q0);
    case Precision::Quad:
      return hgm_integrate_t<quad_float>(spec, path, q0);
  }
  throw std::domain_error("hgm_integrate: unknown precision");
}

GaussManinVector hgm_gfc(const PartitionSpec& spec, double alpha0, double alpha1, int steps,
                         Precision prec) {
  IntegrationPath path;
  path.kind = IntegrationPath::Kind::GfcAlpha;
  path.alpha0 = alpha0;
  path.alpha1 = alpha1;
  path.steps = steps;
  if (alpha0 == -1.0 || alpha0 == 0.5) {
    // closed-form start at full working precision
    switch (prec) {
      case Precision::Double: {
        auto [q, s] = gauss_manin_start_gfc<double>(spec.n, spec.k, alpha0);
        return hgm_integrate_f<double>(spec, path, std::move(q), s);
      }
      case Precision::LongDouble: {
        auto [q, s] = gauss_manin_start_gfc<long double>(spec.n, spec.k, alpha0);
        return hgm_integrate_f<long double>(spec, path, std::move(q), s);
      }
      case Precision::Quad: {
        auto [q, s] = gauss_manin_start_gfc<quad_float>(spec.n, spec.k, alpha0);
        return hgm_integrate_f<quad_float>(spec, path, std::move(q), s);
      }
    }
  }
  GaussManinVector q0 = gauss_manin(spec, indeterminates_gfc(alpha0, spec.width()));
  return hgm_integrate(spec, path, q0, prec);
}

GaussManinVector dhgm(const PartitionSpec& spec, const std::vector<double>& x, Precision prec) {
  for (double v : x)
    if (!(v > 0)) throw std::domain_error("dhgm: x must be strictly positive");
  switch (prec) {
    case Precision::Double: {
      std::vector<double> xf(x.begin(), x.end());
      return dhgm_t<double>(spec, xf);
    }
    case Precision::LongDouble: {
      std::vector<long double> xf(x.begin(), x.end());
      return dhgm_t<long double>(spec, xf);
    }
    case Precision::Quad: {
      std::vector<quad_float> xf(x.begin(), x.end());
      return dhgm_t<quad_float>(spec, xf);
    }
  }
  throw std::domain_error("dhgm: unknown precision");
}

}  // namespace bellhgm
