#ifndef BELLHGM_SPEC_HPP
#define BELLHGM_SPEC_HPP

#include <numeric>
#include <stdexcept>
#include <vector>

namespace bellhgm {

using SizeIndex = std::vector<long long>;  // s_i = number of parts of size i

// Index pair (n, k) plus optional part-size bounds selecting the associated
// variants: r_max < n-k+1 restricts to parts <= r_max, r_min > 1 to parts
// >= r_min.
struct PartitionSpec {
  int n = 1;
  int k = 1;
  int r_min = 1;
  int r_max = 1;  // defaults to n-k+1

  PartitionSpec(int n_, int k_, int rmin = 1, int rmax = -1)
      : n(n_), k(k_), r_min(rmin), r_max(rmax < 0 ? n_ - k_ + 1 : rmax) {
    if (n < 1 || k < 1 || k > n) throw std::domain_error("PartitionSpec: need 1 <= k <= n");
    if (r_min < 1 || r_max < r_min) throw std::domain_error("PartitionSpec: bad part-size bounds");
    if (r_max < n - k + 1 && static_cast<long long>(r_max) * k < n)
      throw std::domain_error("PartitionSpec: upper-restricted support empty (n > r_max*k)");
    if (r_min > 1 && static_cast<long long>(r_min) * k > n)
      throw std::domain_error("PartitionSpec: lower-restricted support empty (n < r_min*k)");
  }

  // length of the size-index / indeterminate vectors
  int width() const { return n - k + 1; }
  bool restricted() const { return r_min > 1 || r_max < n - k + 1; }
};

inline bool in_support(const PartitionSpec& spec, const SizeIndex& s) {
  if (static_cast<int>(s.size()) > spec.width()) {
    for (size_t i = spec.width(); i < s.size(); ++i)
      if (s[i] != 0) return false;
  }
  long long parts = 0, total = 0;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 0) return false;
    if (s[i] > 0) {
      int size = static_cast<int>(i) + 1;
      if (size < spec.r_min || size > spec.r_max) return false;
      parts += s[i];
      total += static_cast<long long>(size) * s[i];
    }
  }
  return parts == spec.k && total == spec.n;
}

}  // namespace bellhgm

#endif
