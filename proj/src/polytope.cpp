#include "bellhgm/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bellhgm/errors.hpp"

namespace bellhgm {

namespace {

// Dense two-phase simplex for small instances, standard form
//   max c.z  s.t.  A z = b, z >= 0,
// with Bland's rule. Rows are assumed scaled to O(1); `tol` separates zero.
struct SimplexResult {
  bool feasible = false;
  double objective = 0;
};

class Simplex {
 public:
  Simplex(std::vector<std::vector<double>> A, std::vector<double> b, std::vector<double> c,
          double tol)
      : m_(A.size()), n_(A[0].size()), tol_(tol) {
    // tableau with artificial variables appended; phase 1 minimizes their sum
    T_.assign(m_ + 1, std::vector<double>(n_ + m_ + 1, 0.0));
    basis_.resize(m_);
    for (size_t r = 0; r < m_; ++r) {
      double sign = b[r] < 0 ? -1.0 : 1.0;
      for (size_t cidx = 0; cidx < n_; ++cidx) T_[r][cidx] = sign * A[r][cidx];
      T_[r][n_ + r] = 1.0;
      T_[r].back() = sign * b[r];
      basis_[r] = n_ + r;
    }
    c_ = std::move(c);
  }

  SimplexResult solve() {
    // phase 1: reduced costs are -sum over rows for structural columns and
    // zero for the (initially basic) artificials
    for (size_t cidx = 0; cidx < n_ + m_; ++cidx) T_[m_][cidx] = 0;
    T_[m_].back() = 0;
    for (size_t r = 0; r < m_; ++r)
      for (size_t cidx = 0; cidx <= n_ + m_; ++cidx) T_[m_][cidx] -= T_[r][cidx];
    for (size_t r = 0; r < m_; ++r) T_[m_][n_ + r] = 0;
    run_simplex(n_ + m_);
    if (-T_[m_].back() > tol_) return {false, 0.0};

    // drive remaining artificials out of the basis where possible
    for (size_t r = 0; r < m_; ++r) {
      if (basis_[r] >= n_) {
        size_t pc = n_;
        for (size_t cidx = 0; cidx < n_; ++cidx)
          if (std::fabs(T_[r][cidx]) > tol_) {
            pc = cidx;
            break;
          }
        if (pc < n_) pivot(r, pc);
      }
    }
    // phase 2 objective (maximize c.z => row = -c expressed in current basis)
    for (size_t cidx = 0; cidx <= n_ + m_; ++cidx) T_[m_][cidx] = 0;
    for (size_t cidx = 0; cidx < n_; ++cidx) T_[m_][cidx] = -c_[cidx];
    for (size_t r = 0; r < m_; ++r) {
      if (basis_[r] < n_ && std::fabs(c_[basis_[r]]) > 0) {
        double coef = c_[basis_[r]];
        for (size_t cidx = 0; cidx <= n_ + m_; ++cidx) T_[m_][cidx] += coef * T_[r][cidx];
      }
    }
    run_simplex(n_);  // artificials stay out
    return {true, T_[m_].back()};
  }

 private:
  void run_simplex(size_t ncols) {
    const size_t max_iter = 50000 + 200 * (m_ + n_);
    for (size_t iter = 0; iter < max_iter; ++iter) {
      size_t pc = ncols;
      for (size_t cidx = 0; cidx < ncols; ++cidx)  // Bland: first negative
        if (T_[m_][cidx] < -tol_) {
          pc = cidx;
          break;
        }
      if (pc == ncols) return;
      size_t pr = m_;
      double best = std::numeric_limits<double>::infinity();
      for (size_t r = 0; r < m_; ++r) {
        if (T_[r][pc] > tol_) {
          double ratio = T_[r].back() / T_[r][pc];
          if (ratio < best - 1e-15 || (std::fabs(ratio - best) <= 1e-15 &&
                                       (pr == m_ || basis_[r] < basis_[pr]))) {
            best = ratio;
            pr = r;
          }
        }
      }
      if (pr == m_) throw numeric_error("simplex: unbounded");
      pivot(pr, pc);
    }
    throw numeric_error("simplex: iteration limit");
  }

  void pivot(size_t pr, size_t pc) {
    double piv = T_[pr][pc];
    for (double& v : T_[pr]) v /= piv;
    for (size_t r = 0; r <= m_; ++r) {
      if (r == pr) continue;
      double f = T_[r][pc];
      if (f == 0.0) continue;
      for (size_t cidx = 0; cidx < T_[r].size(); ++cidx) T_[r][cidx] -= f * T_[pr][cidx];
    }
    basis_[pr] = pc;
  }

  size_t m_, n_;
  double tol_;
  std::vector<std::vector<double>> T_;
  std::vector<size_t> basis_;
  std::vector<double> c_;
};

}  // namespace

Membership polytope_membership(const PartitionSpec& spec, const std::vector<double>& sbar,
                               double tol, std::uint64_t cap) {
  if (static_cast<int>(sbar.size()) != spec.width())
    throw std::domain_error("polytope_membership: sbar must have length n-k+1");
  auto verts = enumerate_support(spec, cap);
  if (verts.empty()) return Membership::Exterior;
  size_t nv = verts.size();
  int w = spec.width();

  // quick affine-constraint screen (coordinates scaled to O(1) by n)
  double scale = static_cast<double>(spec.n);
  {
    double s0 = 0, s1 = 0;
    for (int i = 0; i < w; ++i) {
      s0 += sbar[i];
      s1 += (i + 1) * sbar[i];
    }
    if (std::fabs(s0 - spec.k) / scale > tol * 10 || std::fabs(s1 - spec.n) / scale > tol * 10)
      return Membership::Exterior;
  }

  // variables: mu_v >= 0 (v = 0..nv-1), eps >= 0;  lambda_v = mu_v + eps
  // rows: sum_v lambda_v v = sbar (w rows, scaled by 1/n), sum lambda = 1
  std::vector<std::vector<double>> A(w + 1, std::vector<double>(nv + 1, 0.0));
  std::vector<double> b(w + 1, 0.0), c(nv + 1, 0.0);
  for (size_t v = 0; v < nv; ++v) {
    for (int i = 0; i < w; ++i) A[i][v] = verts[v][i] / scale;
    A[w][v] = 1.0;
  }
  for (int i = 0; i < w; ++i) {
    double colsum = 0;
    for (size_t v = 0; v < nv; ++v) colsum += verts[v][i];
    A[i][nv] = colsum / scale;  // eps column: sum_v v_i
    b[i] = sbar[i] / scale;
  }
  A[w][nv] = static_cast<double>(nv);
  b[w] = 1.0;
  c[nv] = 1.0;  // maximize eps

  SimplexResult res = Simplex(A, b, c, tol).solve();
  if (!res.feasible) return Membership::Exterior;
  return res.objective > tol ? Membership::Interior : Membership::Boundary;
}

int affine_dimension(const PartitionSpec& spec, std::uint64_t cap) {
  auto verts = enumerate_support(spec, cap);
  if (verts.size() <= 1) return 0;
  int w = spec.width();
  std::vector<std::vector<Rational>> rows;
  rows.reserve(verts.size() - 1);
  for (size_t v = 1; v < verts.size(); ++v) {
    std::vector<Rational> r(w);
    for (int i = 0; i < w; ++i) r[i] = Rational(verts[v][i] - verts[0][i]);
    rows.push_back(std::move(r));
  }
  // rational Gaussian elimination
  int rank = 0;
  for (int col = 0; col < w && rank < static_cast<int>(rows.size()); ++col) {
    int piv = -1;
    for (size_t r = rank; r < rows.size(); ++r)
      if (rows[r][col] != 0) {
        piv = static_cast<int>(r);
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[rank], rows[piv]);
    for (size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      Rational f = rows[r][col] / rows[rank][col];
      for (int cc = col; cc < w; ++cc) rows[r][cc] -= f * rows[rank][cc];
    }
    ++rank;
  }
  return rank;
}

}  // namespace bellhgm
