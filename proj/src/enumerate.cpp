#include "bellhgm/enumerate.hpp"

#include <map>
#include <string>

#include "bellhgm/errors.hpp"

namespace bellhgm {

namespace {

// Can `parts` parts with sizes in [lo, hi] sum to `total`?
bool feasible(long long total, long long parts, long long lo, long long hi) {
  if (parts == 0) return total == 0;
  return lo * parts <= total && total <= hi * parts;
}

void recurse(const PartitionSpec& spec, int size, long long rem_n, long long rem_k,
             SizeIndex& s, std::uint64_t cap, std::uint64_t& count,
             const std::function<void(const SizeIndex&)>& visit) {
  if (rem_k == 0) {
    if (rem_n == 0) {
      if (++count > cap)
        throw capacity_error("enumerate_support: more than " + std::to_string(cap) + " partitions");
      visit(s);
    }
    return;
  }
  if (size > spec.r_max || size > spec.width()) return;
  long long max_count = (size >= spec.r_min) ? std::min<long long>(rem_k, rem_n / size) : 0;
  for (long long c = 0; c <= max_count; ++c) {
    if (feasible(rem_n - c * size, rem_k - c, std::max<long long>(size + 1, spec.r_min), spec.r_max)) {
      s[size - 1] = c;
      recurse(spec, size + 1, rem_n - c * size, rem_k - c, s, cap, count, visit);
      s[size - 1] = 0;
    }
  }
}

}  // namespace

void for_each_size_index(const PartitionSpec& spec,
                         const std::function<void(const SizeIndex&)>& visit,
                         std::uint64_t cap) {
  SizeIndex s(spec.width(), 0);
  std::uint64_t count = 0;
  recurse(spec, 1, spec.n, spec.k, s, cap, count, visit);
}

std::vector<SizeIndex> enumerate_support(const PartitionSpec& spec, std::uint64_t cap) {
  std::vector<SizeIndex> out;
  for_each_size_index(spec, [&](const SizeIndex& s) { out.push_back(s); }, cap);
  return out;
}

BigInt partition_count(int n, int k) {
  if (n < 0 || k < 0) return 0;
  if (n == 0 && k == 0) return 1;
  if (n <= 0 || k <= 0 || k > n) return 0;
  static std::map<std::pair<int, int>, BigInt> memo;
  auto it = memo.find({n, k});
  if (it != memo.end()) return it->second;
  BigInt v = partition_count(n - 1, k - 1) + partition_count(n - k, k);
  memo[{n, k}] = v;
  return v;
}

Rational oracle_Z(const PartitionSpec& spec, const std::vector<Rational>& x, std::uint64_t cap) {
  if (static_cast<int>(x.size()) < spec.width())
    throw std::domain_error("oracle_Z: x must have length n-k+1");
  Rational total = 0;
  for_each_size_index(
      spec,
      [&](const SizeIndex& s) {
        Rational term = 1;
        for (size_t i = 0; i < s.size(); ++i) {
          for (long long c = 0; c < s[i]; ++c) {
            term *= x[i];
            term /= static_cast<int>(c + 1);  // accumulates 1/s_i!
          }
          if (term == 0) break;
        }
        total += term;
      },
      cap);
  return total;
}

}  // namespace bellhgm
