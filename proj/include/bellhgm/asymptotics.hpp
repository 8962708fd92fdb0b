#ifndef BELLHGM_ASYMPTOTICS_HPP
#define BELLHGM_ASYMPTOTICS_HPP

#include <array>
#include <vector>

#include "bellhgm/spec.hpp"

namespace bellhgm {

// Unconditional log-affine MLE at fixed odds: the unique m > 0 with A m = b
// and odds(m) = y, found by alternating scaling iterations on
// log x(theta) = Abar^T (Abar Abar^T)^{-1} log y + A^T theta.
struct LogAffineFit {
  std::vector<double> m;          // length n-k+1, A m = (n-k, k)
  std::array<double, 2> theta{};  // fitted natural parameters
  std::vector<double> y;          // the fixed odds (input)
  int iterations = 0;
};

LogAffineFit ips_fit(const PartitionSpec& spec, const std::vector<double>& y,
                     double tol = 1e-12, int max_iter = 100000);

// Determinant convention for the Gaussian (IPS) approximation of log Z.
// `Calibrated` reproduces the published table for the reduced-(4,2) family
// (factor 4 + 5 sqrt(y1)); `Metric` is det(Abar M^{-1} Abar^T). The two agree
// at y = 1 and differ by a constant ~0.033 in log Z on that family.
enum class IpsDetMode { Calibrated, Metric };

// Gaussian approximation of log Z_{n,k}(x): the spec (n,k) is reduced by
// gamma to (n/gamma, k/gamma) and x must be given at the reduced width.
// log Z ~ gamma m.log x - sum lgamma(gamma m_i + 1)
//         + (n_r - k_r - 1) log(2 pi gamma) - (1/2) log D.
double gaussian_approx_logZ(const PartitionSpec& spec, const std::vector<double>& x_reduced,
                            double gamma, IpsDetMode det = IpsDetMode::Calibrated);

// Asymptotic forms of the gfc family x_i = (1-alpha)_{i-1}/i!.
enum class GfcAsymptoticForm { FixedKPos, FixedKNeg, MittagLeffler };

double gfc_asymptotic_logZ(int n, int k, double alpha, GfcAsymptoticForm form);

// Mittag-Leffler density g_alpha(u), 0 < alpha < 1, by its alternating series
// in extended precision; throws numeric_error if the series fails to settle.
double mittag_leffler_pdf(double alpha, double u);

}  // namespace bellhgm

#endif
