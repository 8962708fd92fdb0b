#include "bellhgm/inference.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "bellhgm/errors.hpp"
#include "bellhgm/pfaffian.hpp"
#include "bellhgm/polytope.hpp"
#include "bellhgm/special_values.hpp"

namespace bellhgm {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

std::vector<SignedLog> logx_to_signed(const std::vector<double>& logx) {
  std::vector<SignedLog> xs(logx.size());
  for (size_t i = 0; i < logx.size(); ++i) xs[i] = SignedLog::from_log(logx[i]);
  return xs;
}

}  // namespace

AHypDistribution::AHypDistribution(const PartitionSpec& spec, std::vector<double> logx, int)
    : spec_(spec), logx_(std::move(logx)) {
  if (static_cast<int>(logx_.size()) != spec_.width())
    throw std::domain_error("AHypDistribution: x must have length n-k+1");
  auto xs = logx_to_signed(logx_);
  table_ = std::make_shared<ZTable<SignedLog>>(spec_.n, spec_.k, xs,
                                               std::min(spec_.r_max, spec_.width()));
  if (spec_.r_min > 1) throw std::domain_error("AHypDistribution: r_min > 1 not supported here");
  if (table_->z(spec_.n, spec_.k).is_zero())
    throw std::domain_error("AHypDistribution: Z vanishes on this support");
}

AHypDistribution::AHypDistribution(const PartitionSpec& spec, const std::vector<double>& x)
    : AHypDistribution(spec,
                       [&] {
                         std::vector<double> lx(x.size());
                         for (size_t i = 0; i < x.size(); ++i) {
                           if (x[i] < 0)
                             throw std::domain_error("AHypDistribution: x must be >= 0");
                           lx[i] = x[i] == 0 ? kNegInf : std::log(x[i]);
                         }
                         return lx;
                       }(),
                       0) {}

AHypDistribution AHypDistribution::from_log_x(const PartitionSpec& spec,
                                              const std::vector<double>& logx) {
  return AHypDistribution(spec, logx, 0);
}

double AHypDistribution::log_Z() const { return table_->z(spec_.n, spec_.k).log(); }

SignedLog AHypDistribution::z(int m, int kap) const { return table_->z(m, kap); }

double AHypDistribution::log_pmf(const SizeIndex& s) const {
  if (!in_support(spec_, s)) throw std::domain_error("log_pmf: s not in the support");
  double lp = -log_Z();
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == 0) continue;
    if (std::isinf(logx_[i])) return kNegInf;
    lp += s[i] * logx_[i] - std::lgamma(static_cast<double>(s[i]) + 1.0);
  }
  return lp;
}

std::vector<double> AHypDistribution::eta() const {
  int w = spec_.width();
  double lz = log_Z();
  std::vector<double> out(w, 0.0);
  for (int i = 1; i <= w; ++i) {
    SignedLog zi = table_->z(spec_.n - i, spec_.k - 1);
    if (zi.is_zero() || std::isinf(logx_[i - 1])) continue;
    out[i - 1] = std::exp(logx_[i - 1] + zi.log() - lz);
  }
  return out;
}

Mat<double> AHypDistribution::fisher() const {
  int w = spec_.width();
  double lz = log_Z();
  std::vector<double> e = eta();
  Mat<double> g(w, w);
  for (int i = 1; i <= w; ++i) {
    for (int j = i; j <= w; ++j) {
      double v = -e[i - 1] * e[j - 1];
      if (i == j) v += e[i - 1];
      SignedLog zij = table_->z(spec_.n - i - j, spec_.k - 2);
      if (!zij.is_zero() && !std::isinf(logx_[i - 1]) && !std::isinf(logx_[j - 1]))
        v += std::exp(logx_[i - 1] + logx_[j - 1] + zij.log() - lz);
      g(i - 1, j - 1) = v;
      g(j - 1, i - 1) = v;
    }
  }
  return g;
}

Mat<double> fisher_via_pfaffian(const PartitionSpec& spec, const std::vector<double>& x) {
  for (double v : x)
    if (!(v > 0)) throw std::domain_error("fisher_via_pfaffian: x must be strictly positive");
  AHypDistribution dist(spec, x);
  std::vector<double> e = dist.eta();
  int w = spec.width(), d = spec.n - spec.k;
  Mat<double> g = dist.fisher();  // entries with i or j <= 2 keep the covariance form
  for (int i = 3; i <= w; ++i) {
    int bs = d - i;
    Mat<double> inv;
    if (bs > 0) inv = upper_inverse(ptilde<double>(i, spec.n, bs, x));
    for (int j = 3; j <= w; ++j) {
      if (i + j > d + 2) {
        g(i - 1, j - 1) = -e[i - 1] * e[j - 1] + (i == j ? e[i - 1] : 0.0);
        continue;
      }
      double fact2 = 0.0;  // factorial second moment, sum_l (P~_i)^{-1}_{j-2,l} eta_{l+i+1}
      for (int l = 1; l <= bs; ++l) fact2 += inv(j - 3, l - 1) * e[l + i];
      g(i - 1, j - 1) = fact2 - e[i - 1] * e[j - 1] + (i == j ? e[i - 1] : 0.0);
    }
  }
  return g;
}

MomentState moment_map(const PartitionSpec& spec, const std::vector<double>& x,
                       double check_tol) {
  AHypDistribution dist(spec, x);
  MomentState st;
  st.eta = dist.eta();
  st.g = dist.fisher();
  bool positive = true;
  for (double v : x) positive = positive && v > 0;
  if (positive && spec.n >= spec.k + 2 && !spec.restricted()) {
    Mat<double> gp = fisher_via_pfaffian(spec, x);
    double gscale = 1e-300;
    for (double v : st.g.a) gscale = std::max(gscale, std::fabs(v));
    double worst = 0;
    for (int i = 0; i < st.g.rows; ++i)
      for (int j = 0; j < st.g.cols; ++j)
        worst = std::max(worst, std::fabs(st.g(i, j) - gp(i, j)) / gscale);
    st.cross_check_rel_err = worst;
    if (worst > check_tol)
      throw numeric_error("moment_map: covariance and Pfaffian metrics disagree (rel " +
                          std::to_string(worst) + ")");
  }
  return st;
}

namespace {

struct OddsGauge {
  // x(y) = (1, 1, y_1, ..., y_{n-k-1})
  static std::vector<double> x_of(const std::vector<double>& y, int width) {
    std::vector<double> x(width, 1.0);
    for (size_t i = 0; i < y.size(); ++i) x[i + 2] = y[i];
    return x;
  }
};

struct MleState {
  AHypDistribution dist;
  double f = 0;       // log-likelihood up to constants
  double resid = 0;   // max_i |sbar_{i+2} - eta_{i+2}|
  std::vector<double> r;

  MleState(const PartitionSpec& spec, const std::vector<double>& sbar,
           const std::vector<double>& y)
      : dist(spec, OddsGauge::x_of(y, spec.width())) {
    f = -dist.log_Z();
    for (size_t i = 0; i < y.size(); ++i) f += sbar[i + 2] * std::log(y[i]);
    auto e = dist.eta();
    r.resize(y.size());
    for (size_t i = 0; i < y.size(); ++i) {
      r[i] = sbar[i + 2] - e[i + 2];
      resid = std::max(resid, std::fabs(r[i]));
    }
  }
};

// 1-norm condition estimate via explicit inverse (sizes are tiny)
double cond1_and_solve(Mat<double> H, std::vector<double> rhs, std::vector<double>& sol) {
  int d = H.rows;
  Mat<double> inv(d, d);
  for (int i = 0; i < d; ++i) inv(i, i) = 1.0;
  double norm1 = 0;
  for (int c = 0; c < d; ++c) {
    double s = 0;
    for (int r = 0; r < d; ++r) s += std::fabs(H(r, c));
    norm1 = std::max(norm1, s);
  }
  // Gauss-Jordan with partial pivoting
  for (int c = 0; c < d; ++c) {
    int piv = c;
    for (int r = c + 1; r < d; ++r)
      if (std::fabs(H(r, c)) > std::fabs(H(piv, c))) piv = r;
    if (H(piv, c) == 0.0) return std::numeric_limits<double>::infinity();
    if (piv != c)
      for (int t = 0; t < d; ++t) {
        std::swap(H(piv, t), H(c, t));
        std::swap(inv(piv, t), inv(c, t));
      }
    double p = H(c, c);
    for (int t = 0; t < d; ++t) {
      H(c, t) /= p;
      inv(c, t) /= p;
    }
    for (int r = 0; r < d; ++r) {
      if (r == c) continue;
      double f = H(r, c);
      if (f == 0.0) continue;
      for (int t = 0; t < d; ++t) {
        H(r, t) -= f * H(c, t);
        inv(r, t) -= f * inv(c, t);
      }
    }
  }
  double normi = 0;
  for (int c = 0; c < d; ++c) {
    double s = 0;
    for (int r = 0; r < d; ++r) s += std::fabs(inv(r, c));
    normi = std::max(normi, s);
  }
  sol.assign(d, 0.0);
  for (int r = 0; r < d; ++r) {
    double s = 0;
    for (int c = 0; c < d; ++c) s += inv(r, c) * rhs[c];
    sol[r] = s;
  }
  return norm1 * normi;
}

}  // namespace

FullMleResult mle_full(const PartitionSpec& spec, const std::vector<double>& sbar, MleAlgo algo,
                       double tol, int max_iter, std::optional<std::vector<double>> y0) {
  int w = spec.width(), d = spec.n - spec.k - 1;
  if (static_cast<int>(sbar.size()) != w)
    throw std::domain_error("mle_full: sbar must have length n-k+1");
  {
    double s0 = 0, s1 = 0;
    for (int i = 0; i < w; ++i) {
      s0 += sbar[i];
      s1 += (i + 1) * sbar[i];
    }
    if (std::fabs(s0 - spec.k) > 1e-8 * spec.k || std::fabs(s1 - spec.n) > 1e-8 * spec.n)
      throw std::domain_error("mle_full: sbar violates the linear constraints");
  }
  FullMleResult res;
  try {
    if (polytope_membership(spec, sbar) != Membership::Interior) {
      res.status = MleStatus::NoMle;
      return res;
    }
  } catch (const capacity_error&) {
    // support too large to certify membership; rely on the iteration behavior
  }
  if (d <= 0) {  // n <= k+1: single support point, nothing to fit
    res.status = MleStatus::Converged;
    res.fisher = AHypDistribution(spec, OddsGauge::x_of({}, w)).fisher();
    return res;
  }

  std::vector<double> y = y0.value_or(std::vector<double>(d, 1.0));
  double eps = 1e-2;  // gradient base rate; grows on clean steps, shrinks on rejects
  MleState cur(spec, sbar, y);
  for (int it = 1; it <= max_iter; ++it) {
    if (cur.resid < tol) {
      res.status = MleStatus::Converged;
      res.y = y;
      res.residual = cur.resid;
      res.iterations = it - 1;
      res.fisher = cur.dist.fisher();
      return res;
    }

    std::vector<double> step(d);
    bool newton_ok = false;
    if (algo == MleAlgo::Newton) {
      Mat<double> g = cur.dist.fisher();
      Mat<double> H(d, d);
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) H(i, j) = g(i + 2, j + 2) / y[j];
      std::vector<double> sol;
      double cond = cond1_and_solve(H, cur.r, sol);
      if (cond < 1e12) {
        step = sol;
        newton_ok = true;
      }
    }
    if (!newton_ok)
      for (int i = 0; i < d; ++i) step[i] = eps * cur.r[i] / y[i];

    // backtracking: positivity, then either likelihood ascent or residual contraction
    double t = 1.0;
    bool accepted = false;
    for (int bt = 0; bt < 60; ++bt) {
      std::vector<double> ytry(d);
      bool pos = true;
      for (int i = 0; i < d; ++i) {
        ytry[i] = y[i] + t * step[i];
        pos = pos && ytry[i] > 0;
      }
      if (pos) {
        MleState trial(spec, sbar, ytry);
        if (trial.f >= cur.f || trial.resid < cur.resid) {
          y = std::move(ytry);
          cur = std::move(trial);
          accepted = true;
          break;
        }
      }
      t /= 2;
    }
    if (!newton_ok) {
      // slow growth / fast shrink keeps the rate below the stability boundary
      if (!accepted)
        eps /= 4;
      else if (t == 1.0)
        eps = std::min(eps * 1.15, 1e8);
      else
        eps *= t / 2;
    }
  }
  res.status = MleStatus::IterationLimit;
  res.y = y;
  res.residual = cur.resid;
  res.iterations = max_iter;
  return res;
}

std::vector<double> gfc_dxi(double alpha, int width) {
  std::vector<double> c(width, 0.0);
  double acc = 0.0;
  for (int i = 2; i <= width; ++i) {
    acc += 1.0 / (alpha - (i - 1));
    c[i - 1] = acc;
  }
  return c;
}

double asymptotic_variance_gfc(const PartitionSpec& spec, double alpha) {
  if (!(alpha < 1)) throw std::domain_error("asymptotic_variance_gfc: need alpha < 1");
  int w = spec.width();
  auto dist = AHypDistribution::from_log_x(spec, log_indeterminates_gfc(alpha, w));
  Mat<double> g = dist.fisher();
  std::vector<double> dxi = gfc_dxi(alpha, w);
  double v = 0;
  for (int i = 0; i < w; ++i)
    for (int j = 0; j < w; ++j) v += g(i, j) * dxi[i] * dxi[j];
  return v;
}

namespace {

struct GfcObjective {
  const PartitionSpec& spec;
  const std::vector<double>& sbar;

  double loglik(double alpha) const {
    auto lx = log_indeterminates_gfc(alpha, spec.width());
    auto dist = AHypDistribution::from_log_x(spec, lx);
    double f = -dist.log_Z();
    for (int i = 0; i < spec.width(); ++i) f += sbar[i] * lx[i];
    return f;
  }
  double score(double alpha) const {
    auto dist = AHypDistribution::from_log_x(spec, log_indeterminates_gfc(alpha, spec.width()));
    auto e = dist.eta();
    auto dxi = gfc_dxi(alpha, spec.width());
    double s = 0;
    for (int i = 0; i < spec.width(); ++i) s += dxi[i] * (sbar[i] - e[i]);
    return s;
  }
};

}  // namespace

CurvedMleResult mle_curved_gfc(const PartitionSpec& spec, const std::vector<double>& sbar,
                               double tol, const GfcModel& model) {
  if (static_cast<int>(sbar.size()) != spec.width())
    throw std::domain_error("mle_curved_gfc: sbar must have length n-k+1");
  GfcObjective obj{spec, sbar};
  const double hi = 1.0 - 1e-8;
  const double lo = model.alpha_min;

  // bracket the maximum on a grid log-refined toward alpha = 1
  const int grid_n = 240;
  std::vector<double> grid(grid_n);
  double l0 = std::log(1.0 - lo), l1 = std::log(1.0 - hi);
  for (int i = 0; i < grid_n; ++i)
    grid[i] = 1.0 - std::exp(l0 + (l1 - l0) * i / (grid_n - 1.0));
  int best = 0;
  double fbest = -std::numeric_limits<double>::infinity();
  std::vector<double> fs(grid_n);
  for (int i = 0; i < grid_n; ++i) {
    fs[i] = obj.loglik(grid[i]);
    if (fs[i] > fbest) {
      fbest = fs[i];
      best = i;
    }
  }
  CurvedMleResult res;
  if (best == 0 || best == grid_n - 1) {
    res.status = MleStatus::NoMle;  // maximum pushed to the boundary
    return res;
  }
  // golden-section polish inside [grid[best-1], grid[best+1]]
  double a = grid[best - 1], b = grid[best + 1];
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double c1 = b - gr * (b - a), c2 = a + gr * (b - a);
  double f1 = obj.loglik(c1), f2 = obj.loglik(c2);
  for (int it = 0; it < 200 && (b - a) > 1e-12 * (1 + std::fabs(a)); ++it) {
    if (f1 < f2) {
      a = c1;
      c1 = c2;
      f1 = f2;
      c2 = a + gr * (b - a);
      f2 = obj.loglik(c2);
    } else {
      b = c2;
      c2 = c1;
      f2 = f1;
      c1 = b - gr * (b - a);
      f1 = obj.loglik(c1);
    }
  }
  double alpha = 0.5 * (a + b);
  // Newton polish on the score with the Fisher information as slope
  int it = 0;
  for (; it < 100; ++it) {
    double s = obj.score(alpha);
    if (std::fabs(s) < tol) break;
    double info = asymptotic_variance_gfc(spec, alpha);
    if (!(info > 0)) break;
    double next = alpha + s / info;  // d eta/d alpha ~ g_aa; score' ~ -g_aa
    if (!(next < 1.0) || !(next > lo)) break;
    alpha = next;
  }
  res.status = MleStatus::Converged;
  res.alpha = alpha;
  res.score = obj.score(alpha);
  res.iterations = it;
  res.fisher_info = asymptotic_variance_gfc(spec, alpha);
  return res;
}

CubicExistence mle_exists_cubic(int n, const std::vector<double>& sbar) {
  if (n < 6) throw std::domain_error("mle_exists_cubic: need n >= 6 (k = n-3 >= 3)");
  if (sbar.size() < 4) throw std::domain_error("mle_exists_cubic: sbar must have length 4");
  double s3 = sbar[2], s4 = sbar[3];
  double nn = static_cast<double>(n);
  CubicExistence out;
  out.coeffs[0] = -(s3 + 3 * s4) * nn * nn + (5 * s3 + 15 * s4 + 4) * nn - 2 * (3 * s3 + 9 * s4 + 5);
  out.coeffs[1] = (5 * s3 + 13 * s4) * nn * nn - (21 * s3 + 53 * s4 + 24) * nn +
                  4 * (5 * s3 + 12 * s4 + 13);
  out.coeffs[2] = -(7 * s3 + 17 * s4) * nn * nn + (19 * s3 + 45 * s4 + 44) * nn -
                  2 * (3 * s3 + 7 * s4 + 35);
  out.coeffs[3] = (3 * s3 + 7 * s4) * nn * nn - (3 * s3 + 7 * s4 + 24) * nn + 12;
  // strict sign test, plus f(1) = 8(s3 + 2 s4 - 2) < 0 which rules out the
  // alpha -> 1 vertex datum (n-4,0,0,1)
  out.exists = out.coeffs[0] < 0 && (s3 + 2 * s4 < 2);
  return out;
}

bool dm_mle_exists(int n, int m, const std::vector<double>& sbar) {
  if (static_cast<int>(sbar.size()) < n) throw std::domain_error("dm_mle_exists: sbar length < n");
  double s = 0;
  for (int i = 1; i <= n; ++i) s += static_cast<double>(i) * i * sbar[i - 1];
  return s > n + static_cast<double>(n) * (n - 1) / m;
}

std::vector<double> maxwell_boltzmann_eta(int n, int k) {
  std::vector<double> out(n - k + 1, 0.0);
  SignedLog snk = stirling2(n, k);
  for (int i = 1; i <= n - k + 1; ++i) {
    SignedLog v = stirling2(n - i, k - 1);
    if (v.is_zero()) continue;
    double lb = std::lgamma(n + 1.0) - std::lgamma(i + 1.0) - std::lgamma(n - i + 1.0);
    out[i - 1] = std::exp(lb + v.log() - snk.log());
  }
  return out;
}

namespace {

// full (m, kap) triangle for the DM mixture, x over width n
struct FullZTable {
  int n;
  std::vector<SignedLog> cells;  // (kap)*(n+1) + m
  FullZTable(int n_, const std::vector<double>& logx) : n(n_), cells((n_ + 1) * (n_ + 1)) {
    auto xs = logx_to_signed(logx);
    at(0, 0) = SignedLog::one();
    for (int kap = 1; kap <= n; ++kap)
      for (int m = kap; m <= n; ++m) {
        SignedLog acc = SignedLog::zero();
        for (int j = 1; j <= m - kap + 1 && j <= n; ++j) {
          const SignedLog& prev = at(m - j, kap - 1);
          if (prev.is_zero() || xs[j - 1].is_zero()) continue;
          acc += SignedLog(xs[j - 1].sign, xs[j - 1].logmag + std::log(static_cast<double>(j))) * prev;
        }
        at(m, kap) = SignedLog(acc.sign, acc.logmag - std::log(static_cast<double>(m)));
      }
  }
  SignedLog& at(int m, int kap) { return cells[kap * (n + 1) + m]; }
  SignedLog get(int m, int kap) const {
    if (kap < 0 || m < 0 || kap > n || m > n || m < kap) return SignedLog::zero();
    if (m > 0 && kap == 0) return SignedLog::zero();
    return cells[kap * (n + 1) + m];
  }
};

std::vector<double> dm_logx(double alpha, int n) {
  // x_i = (-alpha)_i / i!
  std::vector<double> lx(n, 0.0);
  double acc = 0.0;
  for (int i = 1; i <= n; ++i) {
    acc += std::log(i - 1 - alpha) - std::log(static_cast<double>(i));
    lx[i - 1] = acc;
  }
  return lx;
}

}  // namespace

DmMoments dm_moments(int n, const DirichletMultinomialModel& model, double alpha) {
  if (!(alpha < 0)) throw std::domain_error("dm_moments: need alpha < 0");
  if (model.m < 1) throw std::domain_error("dm_moments: need m >= 1");
  FullZTable tab(n, dm_logx(alpha, n));
  int kmax = std::min(n, model.m);
  // weights w_k proportional to [m]_k Z_{n,k}
  std::vector<SignedLog> wk(kmax + 1, SignedLog::zero());
  SignedLog tot = SignedLog::zero();
  for (int k = 1; k <= kmax; ++k) {
    double lfall = std::lgamma(model.m + 1.0) - std::lgamma(model.m - k + 1.0);
    wk[k] = SignedLog::from_log(lfall) * tab.get(n, k);
    tot += wk[k];
  }
  DmMoments out;
  out.eta.assign(n, 0.0);
  out.g = Mat<double>(n, n);
  auto lx = dm_logx(alpha, n);
  Mat<double> second(n, n);
  for (int k = 1; k <= kmax; ++k) {
    if (wk[k].is_zero()) continue;
    double w = std::exp(wk[k].log() - tot.log());
    double lz = tab.get(n, k).log();
    for (int i = 1; i <= n; ++i) {
      SignedLog zi = tab.get(n - i, k - 1);
      if (!zi.is_zero()) out.eta[i - 1] += w * std::exp(lx[i - 1] + zi.log() - lz);
      for (int j = i; j <= n; ++j) {
        SignedLog zij = tab.get(n - i - j, k - 2);
        if (!zij.is_zero())
          second(i - 1, j - 1) += w * std::exp(lx[i - 1] + lx[j - 1] + zij.log() - lz);
      }
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      double v = second(i, j) - out.eta[i] * out.eta[j] + (i == j ? out.eta[i] : 0.0);
      out.g(i, j) = v;
      out.g(j, i) = v;
    }
  return out;
}

double asymptotic_variance_dm(int n, const DirichletMultinomialModel& model, double alpha) {
  DmMoments mom = dm_moments(n, model, alpha);
  // dxi_i = d/dalpha log (-alpha)_i = -sum_{j=0}^{i-1} 1/(j-alpha)
  std::vector<double> dxi(n, 0.0);
  double acc = 0.0;
  for (int i = 1; i <= n; ++i) {
    acc += -1.0 / (i - 1 - alpha);
    dxi[i - 1] = acc;
  }
  double v = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) v += mom.g(i, j) * dxi[i] * dxi[j];
  return v;
}

CurvedMleResult mle_curved_dm(int n, const DirichletMultinomialModel& model,
                              const std::vector<double>& sbar, double tol) {
  if (static_cast<int>(sbar.size()) < n) throw std::domain_error("mle_curved_dm: sbar length < n");
  auto score = [&](double alpha) {
    // d/dalpha [ sum_i sbar_i log (-alpha)_i - log (-m alpha)_n ]
    double s = 0, acc = 0;
    for (int i = 1; i <= n; ++i) {
      acc += -1.0 / (i - 1 - alpha);
      s += sbar[i - 1] * acc;
    }
    for (int l = 0; l < n; ++l) s += model.m / (l - static_cast<double>(model.m) * alpha);
    return s;
  };
  // scan alpha = -exp(t) for a sign change of the score
  const int grid_n = 200;
  double t0 = std::log(1e-8), t1 = std::log(1e6);
  double prev_a = -std::exp(t0), prev_s = score(prev_a);
  CurvedMleResult res;
  for (int i = 1; i < grid_n; ++i) {
    double a = -std::exp(t0 + (t1 - t0) * i / (grid_n - 1.0));
    double s = score(a);
    if (prev_s <= 0 && s >= 0) {  // likelihood rises then falls as alpha decreases
      double lo = a, hi = prev_a;  // score(lo) >= 0 >= score(hi)
      for (int bi = 0; bi < 200; ++bi) {
        double mid = 0.5 * (lo + hi);
        double sm = score(mid);
        if (std::fabs(sm) < tol) {
          lo = hi = mid;
          break;
        }
        if (sm >= 0)
          lo = mid;
        else
          hi = mid;
      }
      res.status = MleStatus::Converged;
      res.alpha = 0.5 * (lo + hi);
      res.score = score(res.alpha);
      res.fisher_info = asymptotic_variance_dm(n, model, res.alpha);
      return res;
    }
    prev_a = a;
    prev_s = s;
  }
  res.status = MleStatus::NoMle;
  return res;
}

}  // namespace bellhgm
