#ifndef BELLHGM_DHGM_HPP
#define BELLHGM_DHGM_HPP

#include <cmath>
#include <vector>

#include "bellhgm/pfaffian.hpp"
#include "bellhgm/recurrence.hpp"

namespace bellhgm {

// Difference holonomic gradient method: propagate the Gauss-Manin vector
// through the contiguity relation x_1 Q_{n-1,k-1} = P_1^{(n,k)} Q_{n,k}
// (and its doubling variant) instead of integrating an ODE.
//
// Route 1 (2 <= k < n/2):
//   Q_{n,k} = x_1^{k-1} prod_{i=0}^{k-2} (P_1^{(n-i,k-i)})^{-1} Q_{n-k+1,1},
//   applied innermost-first, with (P_1^{(i,j)})^{-1} in the closed block form
//   (valid while 2j - i != 0, which holds on this route).
// Route 2 (n/2 <= k <= n-2): doubling from Q_{4,2} = (x1 x3 + x2^2/2, x1 x3),
//   obtaining Q_{2i,i} from (Z_{2i-1,i-1}, Q_{2i-2,i-1}); the identity block
//   in the combination matrix is NOT scaled by 1/i (the scaling applies to
//   the two combination rows only -- verified against the recurrence).
//
// State renormalization uses exact power-of-two scaling so results are
// independent of the renormalization points.

namespace detail {

template <class F>
struct DhgmWork {
  const std::vector<F>& x;
  // persistent numerators of the P~_1 entries: entry(l,m) = num(l,m)/(i-l-2),
  // with only the denominator depending on the running index i
  int num_dim = 0;
  std::vector<F> num;  // (dim-1) x (dim-1) upper triangular, row-major
  std::vector<F> w;    // scratch

  explicit DhgmWork(const std::vector<F>& x_) : x(x_) {}

  void prepare(int dim) {
    if (dim == num_dim) return;
    num_dim = dim;
    int b = dim - 1;
    num.assign(static_cast<size_t>(b) * b, F(0));
    for (int l = 1; l <= b; ++l)
      for (int m = l; m <= b; ++m)
        num[static_cast<size_t>(l - 1) * b + (m - 1)] =
            F(m - l + 1) * x[m - l] * x[l + 1] / (x[m + 1] * x[0]);
    w.assign(dim, F(0));
  }

  // v <- (P_1^{(i,j)})^{-1} v; dim = i - j (prepare(dim) must have run)
  void p1_inverse_apply(int i, int j, std::vector<F>& v) {
    int dim = i - j, b = dim - 1;
    int piv = 2 * j - i;
    if (piv == 0)
      throw singular_error("dhgm: P1 inverse blocked by 2j-i = 0 at (n,k)=(" + std::to_string(i) +
                           "," + std::to_string(j) + ")");
    w[0] = v[0];
    for (int r = 0; r < b; ++r) {
      int den0 = i - r - 3;  // denominator i - l - 2 at l = r+1
      if (den0 == 0)
        throw singular_error("dhgm: P~_1 denominator degenerated at row " + std::to_string(r));
      F acc(0);
      const F* row = &num[static_cast<size_t>(r) * b];
      for (int c = r; c < b; ++c) acc += row[c] * v[c + 1];
      w[r + 1] = acc / F(den0);
    }
    F top = w[0];
    for (int c = 1; c < dim; ++c) top -= F(c) * w[c];
    v[0] = top / F(piv);
    for (int r = 1; r < dim; ++r) v[r] = w[r];
  }

  void scale_pow2(std::vector<F>& v, long& ex2) const {
    using tr = float_traits<F>;
    F mx(0);
    for (const F& t : v) mx = std::max<F>(mx, tr::fabs(t));
    if (!(mx > F(0))) return;
    int e = tr::ilogb(mx);
    for (F& t : v) t = tr::ldexp(t, -e);
    ex2 += e;
  }

  // Route 1 core, returns (vector, power-of-two exponent).
  void chain(int n, int k, std::vector<F>& v, long& ex2) {
    int d = n - k;
    prepare(d);
    v.assign(d, F(0));
    v[0] = x[d];
    v[d - 1] = x[d];
    ex2 = 0;
    for (int i = k - 2; i >= 0; --i) {
      p1_inverse_apply(n - i, k - i, v);
      if (x[0] != F(1))
        for (F& t : v) t *= x[0];
      if ((i & 7) == 0) scale_pow2(v, ex2);
    }
  }
};

}  // namespace detail

template <class F>
GaussManinVector dhgm_t(const PartitionSpec& spec, const std::vector<F>& x) {
  using tr = float_traits<F>;
  int n = spec.n, k = spec.k;
  if (n < k + 2 || k < 2) throw std::domain_error("dhgm: need n >= k+2 >= 4");
  if (spec.restricted()) throw std::domain_error("dhgm: unrestricted problems only");
  detail::DhgmWork<F> work(x);

  std::vector<F> q;
  long ex2 = 0;
  if (2 * k < n) {
    work.chain(n, k, q, ex2);
  } else {
    int nk = n - k;
    // side values Z_{2j+1,j} for the doubling steps
    std::vector<F> zside(nk, F(0));
    std::vector<long> zex(nk, 0);
    for (int j = 2; j < nk; ++j) {
      std::vector<F> v;
      long e = 0;
      work.chain(2 * j + 1, j, v, e);
      zside[j] = v[0];
      zex[j] = e;
    }
    q = {x[0] * x[2] + x[1] * x[1] / F(2), x[0] * x[2]};
    ex2 = 0;
    for (int i = 3; i <= nk; ++i) {
      F z = tr::ldexp(zside[i - 1], static_cast<int>(zex[i - 1] - ex2));
      // tail = x2 * P~_2^{(2i)} * q[1..]
      std::vector<F> tail(i - 2, F(0));
      if (i >= 3 && i - 2 > 0) {
        Mat<F> pt = ptilde<F>(2, 2 * i, i - 2, x);
        for (int r = 0; r < i - 2; ++r) {
          F acc(0);
          for (int c = r; c < i - 2; ++c) acc += pt(r, c) * q[c + 1];
          tail[r] = x[1] * acc;
        }
      }
      F top0 = F(2) * x[0] * z + x[1] * q[0];
      F top1 = F(i) * x[0] * z;
      for (int c = 0; c < i - 2; ++c) {
        top0 -= F(c + 1) * tail[c];
        top1 -= F(i) * F(c + 2) * tail[c];
      }
      q.assign(1, top0 / F(i));
      q.push_back(top1 / F(i));
      q.insert(q.end(), tail.begin(), tail.end());
      work.scale_pow2(q, ex2);
    }
    work.prepare(n - k);
    for (int i = 2 * k - n - 1; i >= 0; --i) {
      work.p1_inverse_apply(n - i, k - i, q);
      if (x[0] != F(1))
        for (F& t : q) t *= x[0];
      if ((i & 7) == 0) work.scale_pow2(q, ex2);
    }
  }

  GaussManinVector out;
  int d = n - k;
  out.unit.assign(d, 0.0);
  F mx(0);
  for (const F& t : q) mx = std::max<F>(mx, tr::fabs(t));
  if (!(mx > F(0))) throw numeric_error("dhgm: produced zero vector");
  for (int i = 0; i < d; ++i) out.unit[i] = static_cast<double>(q[i] / mx);
  out.log_scale = static_cast<double>(tr::log(mx)) + ex2 * std::log(2.0);
  return out;
}

// Precision-dispatched front end; quadruple precision is the default
// (mirrors the reference protocol).
GaussManinVector dhgm(const PartitionSpec& spec, const std::vector<double>& x,
                      Precision prec = Precision::Quad);

}  // namespace bellhgm

#endif
