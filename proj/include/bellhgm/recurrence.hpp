#ifndef BELLHGM_RECURRENCE_HPP
#define BELLHGM_RECURRENCE_HPP

#include <cmath>
#include <cstdint>
#include <vector>

#include "bellhgm/enumerate.hpp"
#include "bellhgm/signed_log.hpp"
#include "bellhgm/spec.hpp"

namespace bellhgm {

// Triangular table of Z_{m,kap} built by the one-step recurrence
//   m Z_{m,kap} = sum_j j x_j Z_{m-j,kap-1}
// (the B-polynomial recurrence divided by m!), windowed to m in
// [kap, kap + (n-k)]. O((n-k)^2 k) work; all summands nonnegative so the
// scaled-arithmetic mode is cancellation-free.
//
// R is the scalar ring: SignedLog for production, Rational for the exact mode.
template <class R>
class ZTable {
 public:
  // x is given already shifted/truncated to the effective problem: the table
  // is always for an unrestricted-lower problem with parts <= max_part.
  ZTable(int n, int k, std::vector<R> x, int max_part)
      : n_(n), k_(k), window_(n - k), x_(std::move(x)), max_part_(max_part),
        cells_((static_cast<size_t>(k) + 1) * (window_ + 1)) {
    cell(0, 0) = one_();
    for (int kap = 1; kap <= k_; ++kap) {
      for (int d = 0; d <= window_; ++d) {
        int m = kap + d;
        R acc = zero_();
        int jmax = std::min<int>({max_part_, m - kap + 1, static_cast<int>(x_.size())});
        for (int j = 1; j <= jmax; ++j) {
          const R& xw = x_[j - 1];
          if (is_zero_(xw)) continue;
          const R& prev = z(m - j, kap - 1);
          if (is_zero_(prev)) continue;
          acc = acc + mul_by_int_(xw, j) * prev;
        }
        cell(m, kap) = div_by_int_(acc, m);
      }
    }
  }

  // Z_{m,kap} with the usual conventions (0 outside the triangle/window).
  const R& z(int m, int kap) const {
    static const R kZero = zero_();
    if (kap < 0 || kap > k_ || m < kap || m - kap > window_) return kZero;
    return cells_[static_cast<size_t>(kap) * (window_ + 1) + (m - kap)];
  }

  int n() const { return n_; }
  int k() const { return k_; }

 private:
  R& cell(int m, int kap) { return cells_[static_cast<size_t>(kap) * (window_ + 1) + (m - kap)]; }

  static R zero_() { return R(0); }
  static R one_() { return R(1); }
  static bool is_zero_(const R& v) { return v == R(0); }
  static R mul_by_int_(const R& v, int c) { return v * R(c); }
  static R div_by_int_(const R& v, int c) { return v / R(c); }

  int n_, k_, window_;
  std::vector<R> x_;
  int max_part_;
  std::vector<R> cells_;
};

template <>
inline SignedLog ZTable<SignedLog>::zero_() { return SignedLog::zero(); }
template <>
inline SignedLog ZTable<SignedLog>::one_() { return SignedLog::one(); }
template <>
inline bool ZTable<SignedLog>::is_zero_(const SignedLog& v) { return v.is_zero(); }
template <>
inline SignedLog ZTable<SignedLog>::mul_by_int_(const SignedLog& v, int c) {
  return SignedLog(v.sign, v.logmag + std::log(static_cast<double>(c)));
}
template <>
inline SignedLog ZTable<SignedLog>::div_by_int_(const SignedLog& v, int c) {
  return SignedLog(v.sign, v.logmag - std::log(static_cast<double>(c)));
}

// Lower-restricted problems reduce through the shift identity
// B_{n,k,(r)} = [n]_{(r-1)k} B_{n-(r-1)k, k}(w shifted), which in Z form is
// exactly Z_{n,k,(r)}(x) = Z_{n-(r-1)k, k}(x_{.+r-1}).
struct EffectiveProblem {
  int n, k, max_part;
  int shift;  // r_min - 1
};

inline EffectiveProblem effective_problem(const PartitionSpec& spec) {
  int shift = spec.r_min - 1;
  return EffectiveProblem{spec.n - shift * spec.k, spec.k, spec.r_max - shift, shift};
}

template <class R>
ZTable<R> build_z_table(const PartitionSpec& spec, const std::vector<R>& x) {
  EffectiveProblem ep = effective_problem(spec);
  std::vector<R> xs;
  for (size_t i = ep.shift; i < x.size(); ++i) xs.push_back(x[i]);
  return ZTable<R>(ep.n, ep.k, std::move(xs), ep.max_part);
}

// Z_{n,k}(x) (possibly restricted) in scaled arithmetic. x entries must be
// >= 0; zero entries are skipped (monomial-curve cases).
SignedLog recurrence_Z(const PartitionSpec& spec, const std::vector<double>& x);
SignedLog recurrence_Z_log(const PartitionSpec& spec, const std::vector<double>& logx);

// Exact rational mode of the same recurrence.
Rational recurrence_Z_exact(const PartitionSpec& spec, const std::vector<Rational>& x);

// Gauss-Manin vector Q_{n,k} = (Z_{n,k}, x_3 Z_{n-3,k-1}, ..., x_{n-k+1} Z_{k-1,k-1}),
// stored as a unit-max-norm direction plus one shared log scale.
struct GaussManinVector {
  std::vector<double> unit;  // length n-k, max |entry| = 1
  double log_scale = 0;

  double log_front() const { return std::log(std::fabs(unit[0])) + log_scale; }
  SignedLog front() const {
    if (unit[0] == 0) return SignedLog::zero();
    return SignedLog(unit[0] > 0 ? 1 : -1, log_front());
  }
  SignedLog component(int i) const {
    if (unit[i] == 0) return SignedLog::zero();
    return SignedLog(unit[i] > 0 ? 1 : -1, std::log(std::fabs(unit[i])) + log_scale);
  }
};

GaussManinVector gauss_manin(const PartitionSpec& spec, const std::vector<double>& x);

// UMVUE of the joint factorial moment E[prod [S_i]_{r_i}]
//   = x^r Z_{n - sum i r_i, k - sum r_i} / Z_{n,k}
// (zero when the index drops outside the triangle).
SignedLog factorial_moment(const PartitionSpec& spec, const std::vector<double>& x,
                           const std::vector<long long>& r);

}  // namespace bellhgm

#endif
