#ifndef BELLHGM_ENUMERATE_HPP
#define BELLHGM_ENUMERATE_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <functional>
#include <vector>

#include "bellhgm/spec.hpp"

namespace bellhgm {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

// Every size index of the (possibly r-restricted) support, in ascending
// lexicographic order of (s_1, s_2, ...). Throws capacity_error when the
// support exceeds `cap`.
std::vector<SizeIndex> enumerate_support(const PartitionSpec& spec,
                                         std::uint64_t cap = kDefaultEnumerationCap);

// Visit each size index without materializing the list (same order / cap).
void for_each_size_index(const PartitionSpec& spec,
                         const std::function<void(const SizeIndex&)>& visit,
                         std::uint64_t cap = kDefaultEnumerationCap);

// Number of partitions of n into exactly k parts, p(n,k) = p(n-1,k-1) + p(n-k,k).
// Independent of the enumerator; used as its cross-check.
BigInt partition_count(int n, int k);

// Exact A-hypergeometric polynomial Z_{n,k}(x) = sum_{s} x^s / s! over the
// support, in rational arithmetic. Ground-truth oracle for every other
// evaluation method.
Rational oracle_Z(const PartitionSpec& spec, const std::vector<Rational>& x,
                  std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace bellhgm

#endif
