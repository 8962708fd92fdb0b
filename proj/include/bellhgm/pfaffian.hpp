#ifndef BELLHGM_PFAFFIAN_HPP
#define BELLHGM_PFAFFIAN_HPP

#include <string>
#include <vector>

#include "bellhgm/errors.hpp"
#include "bellhgm/float_traits.hpp"
#include "bellhgm/linalg.hpp"
#include "bellhgm/spec.hpp"

namespace bellhgm {

// P~_i^{(n)}: upper triangular, (P~)_{l,m} = (m-l+1)/(n-i-l-1) *
// x_{m-l+1} x_{i+l+1} / (x_{m+2} x_i), 1 <= l <= m <= size.
// The denominator n-i-l-1 >= k-1 on every index this module uses, but the
// guard stays: no limit value is defined at a degenerate index.
template <class F>
Mat<F> ptilde(int i, int n, int size, const std::vector<F>& x) {
  Mat<F> M(size, size);
  for (int l = 1; l <= size; ++l) {
    int den = n - i - l - 1;
    if (den == 0)
      throw singular_error("ptilde: denominator n-i-l-1 = 0 at i=" + std::to_string(i) +
                           ", l=" + std::to_string(l));
    for (int m = l; m <= size; ++m)
      M(l - 1, m - 1) = F(m - l + 1) / F(den) * x[m - l] * x[i + l] / (x[m + 1] * x[i - 1]);
  }
  return M;
}

// Inverse of an upper-triangular matrix by back-substitution. Refuses
// pivots below 1e-30 of the row scale.
template <class F>
Mat<F> upper_inverse(const Mat<F>& M) {
  using tr = float_traits<F>;
  int size = M.rows;
  Mat<F> inv(size, size);
  for (int r = 0; r < size; ++r) {
    F scale(0);
    for (int c = r; c < size; ++c) scale = std::max<F>(scale, tr::fabs(M(r, c)));
    if (!(tr::fabs(M(r, r)) > F(1e-30) * scale))
      throw singular_error("upper_inverse: near-zero pivot at row " + std::to_string(r));
  }
  for (int c = size - 1; c >= 0; --c) {
    inv(c, c) = F(1) / M(c, c);
    for (int r = c - 1; r >= 0; --r) {
      F s(0);
      for (int t = r + 1; t <= c; ++t) s += M(r, t) * inv(t, c);
      inv(r, c) = -s / M(r, r);
    }
  }
  return inv;
}

// P_i^{(n,k)}, (n-k) x (n-k). First rows from the linear annihilators:
//   (P_1)_{1,.} = (2k-n, 1, 2, ..., n-k-1),
//   (P_2)_{1,.} = (n-k, -2, -3, ..., -(n-k)),
//   (P_i)_{1,j} = delta_{i,j+1} for i >= 3;
// row i-1 picks up a diagonal 1 for i >= 3; rows 2..n-k-i+1 carry the
// (P~_i)^{-1} block in columns i+1..n-k.
template <class F>
Mat<F> pfaffian_matrix(int i, int n, int k, const std::vector<F>& x) {
  int d = n - k;
  Mat<F> P(d, d);
  if (i == 1) {
    P(0, 0) = F(2 * k - n);
    for (int j = 2; j <= d; ++j) P(0, j - 1) = F(j - 1);
  } else if (i == 2) {
    P(0, 0) = F(d);
    for (int j = 2; j <= d; ++j) P(0, j - 1) = F(-j);
  } else if (i - 1 <= d) {
    P(0, i - 2) = F(1);
  }
  if (i >= 3 && i - 1 <= d) P(i - 2, i - 2) += F(1);
  int bs = d - i;
  if (bs > 0) {
    Mat<F> inv = upper_inverse(ptilde<F>(i, n, bs, x));
    for (int l = 2; l <= d - i + 1; ++l)
      for (int m = i + 1; m <= d; ++m) P(l - 1, m - 1) += inv(l - 2, m - i - 1);
  }
  return P;
}

template <class F>
std::vector<Mat<F>> pfaffian_matrices(int n, int k, const std::vector<F>& x) {
  std::vector<Mat<F>> out;
  out.reserve(n - k + 1);
  for (int i = 1; i <= n - k + 1; ++i) out.push_back(pfaffian_matrix<F>(i, n, k, x));
  return out;
}

// Closed-form (P~^{(i)})^{-1} entry for the generalized-factorial-coefficient
// family x_i = (1-alpha)_{i-1}/i!, written with the P_i assembly indices:
// row l (2 <= l <= n-k-i+1), column m (i+1 <= m <= n-k).
double gfc_ptilde_inverse_entry(int i, int n, double alpha, int l, int m);

// Public double-precision surface: all Pfaffian matrices at a point.
struct PfaffianSet {
  int n = 0, k = 0;
  std::vector<Mat<double>> P;  // P[i-1] = P_i^{(n,k)}, i = 1..n-k+1
};

PfaffianSet pfaffian_set(const PartitionSpec& spec, const std::vector<double>& x);

}  // namespace bellhgm

#endif
