#ifndef BELLHGM_INFERENCE_HPP
#define BELLHGM_INFERENCE_HPP

#include <array>
#include <memory>
#include <optional>
#include <vector>

#include "bellhgm/linalg.hpp"
#include "bellhgm/recurrence.hpp"
#include "bellhgm/signed_log.hpp"
#include "bellhgm/spec.hpp"

namespace bellhgm {

// Microcanonical Gibbs distribution q_{n,k}(s; x) = x^s / (s! Z_{n,k}(x)).
// Holds the full Z table so pmf, moments and the sequential sampler share one
// recurrence run.
class AHypDistribution {
 public:
  AHypDistribution(const PartitionSpec& spec, const std::vector<double>& x);
  static AHypDistribution from_log_x(const PartitionSpec& spec, const std::vector<double>& logx);

  const PartitionSpec& spec() const { return spec_; }
  const std::vector<double>& log_x() const { return logx_; }  // -inf on zero entries
  double log_Z() const;
  SignedLog z(int m, int kap) const;  // sub-polynomial access (conventioned zeros)

  // log q_{n,k}(s; x); throws domain_error off the support
  double log_pmf(const SizeIndex& s) const;

  // dual coordinates eta_i = x_i Z_{n-i,k-1}/Z_{n,k}
  std::vector<double> eta() const;
  // Fisher metric from the covariance form
  Mat<double> fisher() const;

 private:
  AHypDistribution(const PartitionSpec& spec, std::vector<double> logx, int);
  PartitionSpec spec_;
  std::vector<double> logx_;
  std::shared_ptr<ZTable<SignedLog>> table_;
};

// Dual coordinates plus the Fisher metric. Construction computes the metric
// both from the covariance form and from the Pfaffian first-moment identity
// and requires them to agree (strictly positive x only for the second route).
struct MomentState {
  std::vector<double> eta;
  Mat<double> g;
  double cross_check_rel_err = 0;  // covariance form vs Pfaffian identity
};

MomentState moment_map(const PartitionSpec& spec, const std::vector<double>& x,
                       double check_tol = 1e-8);

// Fisher metric via the Pfaffian identity
//   E[S_i S_j] = delta_ij eta_i + sum_l (P~_i)^{-1}_{j-2,l} eta_{l+i+1},
// for 3 <= i,j with i+j <= n-k+2 (entries outside that block are copied from
// the covariance form).
Mat<double> fisher_via_pfaffian(const PartitionSpec& spec, const std::vector<double>& x);

enum class MleStatus { Converged, NoMle, IterationLimit };
enum class MleAlgo { Gradient, Newton };

struct FullMleResult {
  MleStatus status = MleStatus::NoMle;
  std::vector<double> y;  // generalized odds estimate, length n-k-1
  double residual = 0;    // max_i |sbar_{i+2} - eta_{i+2}|
  int iterations = 0;
  Mat<double> fisher;     // full metric at the estimate (when converged)
};

// Full-family MLE in the odds gauge x = (1, 1, y_1, ..., y_{n-k-1}).
// Returns NoMle when sbar is not in the relative interior of the Newton
// polytope (checked by LP when the support is enumerable under the cap).
FullMleResult mle_full(const PartitionSpec& spec, const std::vector<double>& sbar,
                       MleAlgo algo = MleAlgo::Newton, double tol = 1e-10, int max_iter = 20000,
                       std::optional<std::vector<double>> y0 = std::nullopt);

// One-parameter curved families.
struct GfcModel {
  // x_i = (1-alpha)_{i-1}/i!, alpha in (-inf, 1)
  double alpha_min = -50.0;  // -inf proxy for the bracketing stage
};
struct DirichletMultinomialModel {
  int m = 2;  // number of cells; x_i = (-alpha)_i/i!, alpha < 0, K mixed over [m]_k
};

struct CurvedMleResult {
  MleStatus status = MleStatus::NoMle;
  double alpha = 0;
  double score = 0;  // stationarity residual at the estimate
  int iterations = 0;
  double fisher_info = 0;  // g_{alpha alpha} at the estimate
};

CurvedMleResult mle_curved_gfc(const PartitionSpec& spec, const std::vector<double>& sbar,
                               double tol = 1e-10, const GfcModel& model = {});

// DM curved MLE over alpha < 0; sbar lives on the partition-polytope
// coordinates (length n).
CurvedMleResult mle_curved_dm(int n, const DirichletMultinomialModel& model,
                              const std::vector<double>& sbar, double tol = 1e-10);

// Existence test for the gfc MLE at k = n-3 via the cubic estimating
// equation: exists iff the alpha^3 coefficient is negative, equivalently
// sbar_3 + 3 sbar_4 > 2(2n-5)/((n-2)(n-3)).
struct CubicExistence {
  bool exists = false;
  std::array<double, 4> coeffs{};  // a3, a2, a1, a0 of f(alpha)
};
CubicExistence mle_exists_cubic(int n, const std::vector<double>& sbar);

// DM MLE existence: sum_i i^2 sbar_i > n + n(n-1)/m.
bool dm_mle_exists(int n, int m, const std::vector<double>& sbar);

// Squared norm g_{alpha alpha} = g_ij dxi^i dxi^j of the model tangent;
// 1/(N g_{alpha alpha}) is the first-order asymptotic variance.
double asymptotic_variance_gfc(const PartitionSpec& spec, double alpha);
double asymptotic_variance_dm(int n, const DirichletMultinomialModel& model, double alpha);

// d(log x_i)/dalpha for the gfc family (0 for i = 1).
std::vector<double> gfc_dxi(double alpha, int width);

// Maxwell-Boltzmann limit (alpha -> -inf) of the gfc moment map:
// eta_i = C(n,i) S(n-i,k-1)/S(n,k).
std::vector<double> maxwell_boltzmann_eta(int n, int k);

// Mixture quantities of the Dirichlet-multinomial model (weights [m]_k over k).
struct DmMoments {
  std::vector<double> eta;  // length n
  Mat<double> g;            // n x n covariance
};
DmMoments dm_moments(int n, const DirichletMultinomialModel& model, double alpha);

}  // namespace bellhgm

#endif
