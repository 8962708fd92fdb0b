#ifndef BELLHGM_POLYTOPE_HPP
#define BELLHGM_POLYTOPE_HPP

#include <cstdint>
#include <vector>

#include "bellhgm/enumerate.hpp"
#include "bellhgm/spec.hpp"

namespace bellhgm {

enum class Membership { Interior, Boundary, Exterior };

// Position of sbar relative to New(Z_{n,k}) = conv(support) inside the affine
// subspace {sum s = k, sum i s = n}. Decided by LP over the enumerated vertex
// set: maximize eps s.t. sbar = sum lambda_v v, sum lambda = 1, lambda >= eps.
// sbar is in the relative interior iff it admits a representation with all
// weights positive.
Membership polytope_membership(const PartitionSpec& spec, const std::vector<double>& sbar,
                               double tol = 1e-9, std::uint64_t cap = kDefaultEnumerationCap);

// Affine dimension of the Newton polytope: exact rank of the centered vertex
// set (rational Gaussian elimination).
int affine_dimension(const PartitionSpec& spec, std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace bellhgm

#endif
