#ifndef BELLHGM_SPECIAL_VALUES_HPP
#define BELLHGM_SPECIAL_VALUES_HPP

#include <vector>

#include "bellhgm/signed_log.hpp"
#include "bellhgm/spec.hpp"

namespace bellhgm {

// Points of the indeterminate space with known closed-form Z_{n,k}.
enum class SpecialPoint {
  Ones,         // x_i = 1                -> C(n-1,k-1)/k!
  HalfRising,   // x_i = (1/2)_{i-1}/i!   -> (2n-k-1)!/(2^{2(n-k)} n! (n-k)! (k-1)!)
  Inv,          // x_i = 1/i              -> |s(n,k)|/n!
  InvFactorial, // x_i = 1/i!             -> S(n,k)/n!
};

// log Z_{n,k} at a special point. Stirling-number cases run the triangle
// recurrences in scaled arithmetic rather than closed forms.
SignedLog special_value(SpecialPoint point, int n, int k);

// Special point of the generalized-factorial-coefficient family
// x_i = (1-alpha)_{i-1}/i!. Only alpha = -1 (ones) and alpha = 1/2
// (half-rising) have closed forms.
SignedLog special_value_gfc(double alpha, int n, int k);

// Indeterminate vectors for the named points / the gfc family, length m.
std::vector<double> indeterminates_ones(int m);
std::vector<double> indeterminates_inv(int m);
std::vector<double> indeterminates_inv_factorial(int m);
std::vector<double> indeterminates_gfc(double alpha, int m);
// log x_i for the gfc family (safe for very negative alpha where x overflows)
std::vector<double> log_indeterminates_gfc(double alpha, int m);

// Signless Stirling numbers of the first kind |s(n,k)| and Stirling numbers
// of the second kind S(n,k), as scaled values (triangle recurrences).
SignedLog stirling1_unsigned(int n, int k);
SignedLog stirling2(int n, int k);

}  // namespace bellhgm

#endif
