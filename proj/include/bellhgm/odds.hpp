#ifndef BELLHGM_ODDS_HPP
#define BELLHGM_ODDS_HPP

#include <vector>

namespace bellhgm {

// Generalized odds ratios y_i = x_1^i x_{i+2} / x_2^{i+1}, i = 1..m-2, the
// Gale-transform coordinates of the two-row matrix. Invariant under the torus
// action x_i -> x_i s_1^{i-1} s_2, they parametrize the identifiable quotient.
std::vector<double> odds_from_x(const std::vector<double>& x);

// Canonical representative with x_1 = x_2 = 1, x_{i+2} = y_i.
std::vector<double> canonical_x(const std::vector<double>& y, int width);

// log-scale versions (safe when x itself would overflow)
std::vector<double> log_odds_from_log_x(const std::vector<double>& logx);

// x_i -> x_i s1^{i-1} s2
std::vector<double> torus_scale(const std::vector<double>& x, double s1, double s2);

}  // namespace bellhgm

#endif
