#ifndef BELLHGM_LINALG_HPP
#define BELLHGM_LINALG_HPP

#include <cstddef>
#include <vector>

namespace bellhgm {

// Minimal dense row-major matrix; the Pfaffian blocks are at most
// (n-k) x (n-k) so nothing heavier is warranted.
template <class F>
struct Mat {
  int rows = 0, cols = 0;
  std::vector<F> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, F(0)) {}

  F& operator()(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const F& operator()(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

  std::vector<F> operator*(const std::vector<F>& v) const {
    std::vector<F> out(rows, F(0));
    for (int r = 0; r < rows; ++r) {
      F acc(0);
      const F* row = &a[static_cast<size_t>(r) * cols];
      for (int c = 0; c < cols; ++c) acc += row[c] * v[c];
      out[r] = acc;
    }
    return out;
  }

  Mat<F>& axpy(F alpha, const Mat<F>& other) {
    for (size_t i = 0; i < a.size(); ++i) a[i] += alpha * other.a[i];
    return *this;
  }
};

}  // namespace bellhgm

#endif
