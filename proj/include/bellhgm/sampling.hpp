#ifndef BELLHGM_SAMPLING_HPP
#define BELLHGM_SAMPLING_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "bellhgm/inference.hpp"
#include "bellhgm/spec.hpp"

namespace bellhgm {

using Rng = std::mt19937_64;

// Exact sequential sampler: with (n', k') remaining, the next cluster size j
// is drawn with probability x_j Z_{n'-j,k'-1} / (k' Z_{n',k'}). These sum to
// one by the second-row annihilator, and the telescoped product times the
// ordering count k!/prod s_i! is exactly q_{n,k}(s).
SizeIndex sample_exact(const AHypDistribution& dist, Rng& rng);

// Markov basis z = e_{i1} + e_{i4} - e_{i1+1} - e_{i4-1}, i1+2 <= i4 <= n-k+1.
struct MarkovMove {
  int i1 = 1, i4 = 3;
};
std::vector<MarkovMove> markov_basis(const PartitionSpec& spec);

// log of the Metropolis-Hastings ratio q(s + eps z)/q(s); -inf if the move
// leaves the support. Exact multiset-coefficient bookkeeping (coincident
// indices handled).
double mh_log_ratio(const AHypDistribution& dist, const SizeIndex& s, const MarkovMove& mv,
                    int eps);

// One MH step with the given proposal; returns the (possibly unchanged) state.
SizeIndex mcmc_step(const AHypDistribution& dist, const SizeIndex& s, const MarkovMove& mv,
                    int eps, Rng& rng);

// Chain with uniform proposal over (move, eps); returns the state after
// `sweeps` proposals.
SizeIndex mcmc_run(const AHypDistribution& dist, SizeIndex s, std::uint64_t sweeps, Rng& rng);

enum class SamplerKind { Exact, Mcmc };

struct TestReport {
  double observed_logq = 0;
  double significance = 0;
  double std_error = 0;  // sqrt(p(1-p)/M); 0 in enumeration mode
  std::string sampler;
  std::uint64_t sample_count = 0;
  std::uint64_t seed = 0;
  bool exact_enumeration = false;
};

struct SimilarTestOptions {
  std::uint64_t enumeration_cap = 2'000'000;  // exact mode when support fits
  std::uint64_t burn_in = 1000;               // MCMC only
  std::uint64_t thin = 5;                     // MCMC only
  bool force_monte_carlo = false;
};

// Significance P(q(S;x0) < q(s_obs;x0)) under dist0. Strict inequality; ties
// contribute zero. Enumerates exactly when the support is small enough,
// otherwise Monte-Carlo with the requested sampler.
TestReport similar_test(const AHypDistribution& dist0, const SizeIndex& s_obs, std::uint64_t M,
                        SamplerKind sampler, std::uint64_t seed,
                        const SimilarTestOptions& opts = {});

}  // namespace bellhgm

#endif
