#include "bellhgm/recurrence.hpp"

#include <stdexcept>

namespace bellhgm {

namespace {

std::vector<SignedLog> to_signed_log(const std::vector<double>& x, bool as_log) {
  std::vector<SignedLog> out(x.size());
  for (size_t i = 0; i < x.size(); ++i) {
    if (as_log) {
      out[i] = SignedLog::from_log(x[i]);
    } else {
      if (x[i] < 0) throw std::domain_error("recurrence_Z: x must be entrywise >= 0");
      out[i] = SignedLog::from_double(x[i]);
    }
  }
  return out;
}

}  // namespace

SignedLog recurrence_Z(const PartitionSpec& spec, const std::vector<double>& x) {
  if (static_cast<int>(x.size()) < spec.width())
    throw std::domain_error("recurrence_Z: x must have length n-k+1");
  auto xs = to_signed_log(x, false);
  auto table = build_z_table(spec, xs);
  EffectiveProblem ep = effective_problem(spec);
  return table.z(ep.n, ep.k);
}

SignedLog recurrence_Z_log(const PartitionSpec& spec, const std::vector<double>& logx) {
  if (static_cast<int>(logx.size()) < spec.width())
    throw std::domain_error("recurrence_Z_log: logx must have length n-k+1");
  auto xs = to_signed_log(logx, true);
  auto table = build_z_table(spec, xs);
  EffectiveProblem ep = effective_problem(spec);
  return table.z(ep.n, ep.k);
}

Rational recurrence_Z_exact(const PartitionSpec& spec, const std::vector<Rational>& x) {
  if (static_cast<int>(x.size()) < spec.width())
    throw std::domain_error("recurrence_Z_exact: x must have length n-k+1");
  auto table = build_z_table(spec, x);
  EffectiveProblem ep = effective_problem(spec);
  return table.z(ep.n, ep.k);
}

GaussManinVector gauss_manin(const PartitionSpec& spec, const std::vector<double>& x) {
  if (spec.n < spec.k + 2) throw std::domain_error("gauss_manin: need n >= k+2");
  if (spec.restricted()) throw std::domain_error("gauss_manin: unrestricted problems only");
  auto xs = to_signed_log(x, false);
  ZTable<SignedLog> table(spec.n, spec.k, xs, spec.width());
  int d = spec.n - spec.k;
  std::vector<SignedLog> q(d);
  q[0] = table.z(spec.n, spec.k);
  for (int m = 2; m <= d; ++m) q[m - 1] = xs[m] * table.z(spec.n - m - 1, spec.k - 1);

  GaussManinVector out;
  out.unit.resize(d);
  double mx = -std::numeric_limits<double>::infinity();
  for (const auto& v : q)
    if (!v.is_zero()) mx = std::max(mx, v.logmag);
  if (std::isinf(mx)) throw std::domain_error("gauss_manin: zero vector (empty support)");
  out.log_scale = mx;
  for (int i = 0; i < d; ++i)
    out.unit[i] = q[i].is_zero() ? 0.0 : q[i].sign * std::exp(q[i].logmag - mx);
  return out;
}

SignedLog factorial_moment(const PartitionSpec& spec, const std::vector<double>& x,
                           const std::vector<long long>& r) {
  if (spec.restricted()) throw std::domain_error("factorial_moment: unrestricted problems only");
  long long sum_r = 0, sum_ir = 0;
  for (size_t i = 0; i < r.size(); ++i) {
    if (r[i] < 0) throw std::domain_error("factorial_moment: orders must be >= 0");
    sum_r += r[i];
    sum_ir += static_cast<long long>(i + 1) * r[i];
  }
  if (sum_r > spec.k || sum_ir > spec.n) return SignedLog::zero();
  if (spec.n - sum_ir < spec.k - sum_r) return SignedLog::zero();
  // n - k >= sum (i-1) r_i fails exactly when the numerator index leaves the window
  if ((sum_ir - sum_r) > spec.n - spec.k) return SignedLog::zero();

  auto xs = to_signed_log(x, false);
  ZTable<SignedLog> table(spec.n, spec.k, xs, spec.width());
  SignedLog xr = SignedLog::one();
  for (size_t i = 0; i < r.size(); ++i)
    if (r[i] > 0) xr *= xs[i].pow_int(r[i]);
  return xr * table.z(spec.n - static_cast<int>(sum_ir), spec.k - static_cast<int>(sum_r)) /
         table.z(spec.n, spec.k);
}

}  // namespace bellhgm
