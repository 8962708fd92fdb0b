#include "bellhgm/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bellhgm/enumerate.hpp"
#include "bellhgm/errors.hpp"

namespace bellhgm {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
}

SizeIndex sample_exact(const AHypDistribution& dist, Rng& rng) {
  const PartitionSpec& spec = dist.spec();
  const auto& logx = dist.log_x();
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  SizeIndex s(spec.width(), 0);
  int nr = spec.n, kr = spec.k;
  std::vector<double> p(spec.width());
  while (kr > 0) {
    double lz = dist.z(nr, kr).log();
    int jmax = std::min({nr - kr + 1, spec.width(), spec.r_max});
    double total = 0;
    for (int j = 1; j <= jmax; ++j) {
      SignedLog znj = dist.z(nr - j, kr - 1);
      p[j - 1] = (znj.is_zero() || std::isinf(logx[j - 1]))
                     ? 0.0
                     : std::exp(logx[j - 1] + znj.log() - std::log(static_cast<double>(kr)) - lz);
      total += p[j - 1];
    }
    if (std::fabs(total - 1.0) > 1e-8)
      throw numeric_error("sample_exact: sequential probabilities sum to " + std::to_string(total));
    double u = unif(rng) * total;
    int pick = jmax;
    double acc = 0;
    for (int j = 1; j <= jmax; ++j) {
      acc += p[j - 1];
      if (u <= acc) {
        pick = j;
        break;
      }
    }
    s[pick - 1] += 1;
    nr -= pick;
    kr -= 1;
  }
  return s;
}

std::vector<MarkovMove> markov_basis(const PartitionSpec& spec) {
  std::vector<MarkovMove> out;
  int m = std::min(spec.width(), spec.r_max);
  for (int i1 = std::max(1, spec.r_min); i1 <= m; ++i1)
    for (int i4 = i1 + 2; i4 <= m; ++i4) out.push_back({i1, i4});
  return out;
}

double mh_log_ratio(const AHypDistribution& dist, const SizeIndex& s, const MarkovMove& mv,
                    int eps) {
  const auto& logx = dist.log_x();
  int idx[4] = {mv.i1 - 1, mv.i4 - 1, mv.i1, mv.i4 - 2};  // +1,+1,-1,-1 positions (0-based)
  int delta[4] = {eps, eps, -eps, -eps};
  // net per-coordinate change (i4 = i1+2 makes the two middle indices coincide)
  std::vector<std::pair<int, int>> net;
  for (int t = 0; t < 4; ++t) {
    bool merged = false;
    for (auto& [pos, d] : net)
      if (pos == idx[t]) {
        d += delta[t];
        merged = true;
        break;
      }
    if (!merged) net.push_back({idx[t], delta[t]});
  }
  double lr = 0;
  for (auto& [pos, d] : net) {
    if (d == 0) continue;
    long long snew = s[pos] + d;
    if (snew < 0) return kNegInf;
    if (d > 0 && std::isinf(logx[pos])) return kNegInf;
    lr += d * logx[pos];
    // factorial part: s[pos]! / snew!
    lr += std::lgamma(static_cast<double>(s[pos]) + 1.0) -
          std::lgamma(static_cast<double>(snew) + 1.0);
  }
  return lr;
}

SizeIndex mcmc_step(const AHypDistribution& dist, const SizeIndex& s, const MarkovMove& mv,
                    int eps, Rng& rng) {
  double lr = mh_log_ratio(dist, s, mv, eps);
  if (std::isinf(lr) && lr < 0) return s;
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  if (lr < 0 && std::log(unif(rng)) >= lr) return s;
  SizeIndex out = s;
  out[mv.i1 - 1] += eps;
  out[mv.i4 - 1] += eps;
  out[mv.i1] -= eps;
  out[mv.i4 - 2] -= eps;
  return out;
}

SizeIndex mcmc_run(const AHypDistribution& dist, SizeIndex s, std::uint64_t sweeps, Rng& rng) {
  auto moves = markov_basis(dist.spec());
  if (moves.empty()) return s;
  std::uniform_int_distribution<size_t> pick_move(0, moves.size() - 1);
  std::uniform_int_distribution<int> pick_eps(0, 1);
  for (std::uint64_t t = 0; t < sweeps; ++t) {
    const MarkovMove& mv = moves[pick_move(rng)];
    int eps = pick_eps(rng) == 0 ? 1 : -1;
    s = mcmc_step(dist, s, mv, eps, rng);
  }
  return s;
}

TestReport similar_test(const AHypDistribution& dist0, const SizeIndex& s_obs, std::uint64_t M,
                        SamplerKind sampler, std::uint64_t seed, const SimilarTestOptions& opts) {
  const PartitionSpec& spec = dist0.spec();
  double lq_obs = dist0.log_pmf(s_obs);
  TestReport rep;
  rep.observed_logq = lq_obs;
  rep.seed = seed;
  rep.sampler = sampler == SamplerKind::Exact ? "exact" : "mcmc";

  if (!opts.force_monte_carlo) {
    try {
      double p = 0;
      for_each_size_index(
          spec,
          [&](const SizeIndex& s) {
            double lq = dist0.log_pmf(s);
            if (lq < lq_obs - 1e-12) p += std::exp(lq);
          },
          opts.enumeration_cap);
      rep.significance = p;
      rep.std_error = 0;
      rep.sample_count = 0;
      rep.exact_enumeration = true;
      rep.sampler = "enumeration";
      return rep;
    } catch (const capacity_error&) {
      // fall through to Monte-Carlo
    }
  }

  Rng rng(seed);
  std::uint64_t hits = 0;
  if (sampler == SamplerKind::Exact) {
    for (std::uint64_t t = 0; t < M; ++t) {
      SizeIndex s = sample_exact(dist0, rng);
      if (dist0.log_pmf(s) < lq_obs - 1e-12) ++hits;
    }
  } else {
    SizeIndex s = s_obs;
    s = mcmc_run(dist0, s, opts.burn_in, rng);
    for (std::uint64_t t = 0; t < M; ++t) {
      s = mcmc_run(dist0, s, opts.thin, rng);
      if (dist0.log_pmf(s) < lq_obs - 1e-12) ++hits;
    }
  }
  double p = static_cast<double>(hits) / M;
  rep.significance = p;
  rep.std_error = std::sqrt(p * (1 - p) / M);
  rep.sample_count = M;
  return rep;
}

}  // namespace bellhgm
