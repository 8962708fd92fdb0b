#include <cmath>
#include <random>

#include "bellhgm/enumerate.hpp"
#include "bellhgm/inference.hpp"
#include "bellhgm/odds.hpp"
#include "bellhgm/polytope.hpp"
#include "bellhgm/special_values.hpp"
#include "doctest.h"

using namespace bellhgm;

namespace {

// Jacobi eigenvalues of a small symmetric matrix (test-side rank checks)
std::vector<double> sym_eigenvalues(Mat<double> a) {
  int n = a.rows;
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off += a(i, j) * a(i, j);
    if (off < 1e-24) break;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        if (std::fabs(a(p, q)) < 1e-18) continue;
        double theta = (a(q, q) - a(p, p)) / (2 * a(p, q));
        double t = (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1));
        double c = 1 / std::sqrt(t * t + 1), s = t * c;
        for (int i = 0; i < n; ++i) {
          double aip = a(i, p), aiq = a(i, q);
          a(i, p) = c * aip - s * aiq;
          a(i, q) = s * aip + c * aiq;
        }
        for (int i = 0; i < n; ++i) {
          double api = a(p, i), aqi = a(q, i);
          a(p, i) = c * api - s * aqi;
          a(q, i) = s * api + c * aqi;
        }
      }
  }
  std::vector<double> ev(n);
  for (int i = 0; i < n; ++i) ev[i] = a(i, i);
  std::sort(ev.begin(), ev.end());
  return ev;
}

std::vector<double> gfc_x(double alpha, int m) { return indeterminates_gfc(alpha, m); }

}  // namespace

TEST_CASE("log_pmf: the (4,2) values and normalization") {
  AHypDistribution d(PartitionSpec(4, 2), {1, 1, 1});
  CHECK(d.log_pmf({0, 2, 0}) == doctest::Approx(std::log(1.0 / 3.0)).epsilon(1e-12));
  CHECK(d.log_pmf({1, 0, 1}) == doctest::Approx(std::log(2.0 / 3.0)).epsilon(1e-12));
  CHECK_THROWS_AS(d.log_pmf({2, 1, 0}), std::domain_error);

  std::mt19937_64 rng(71);
  std::uniform_real_distribution<double> u(0.2, 2.0);
  for (int rep = 0; rep < 5; ++rep) {
    int n = 8 + static_cast<int>(rng() % 5), k = 3 + static_cast<int>(rng() % 3);
    PartitionSpec spec(n, k);
    std::vector<double> x(spec.width());
    for (auto& v : x) v = u(rng);
    AHypDistribution dist(spec, x);
    double total = 0;
    for (const auto& s : enumerate_support(spec)) total += std::exp(dist.log_pmf(s));
    CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("moment map: closed-form points and constraints") {
  // Example interval case at (6,4): y1 = 3/2 -> eta = (2.5, 1, 0.5)
  auto st = moment_map(PartitionSpec(6, 4), canonical_x({1.5}, 3));
  CHECK(st.eta[0] == doctest::Approx(2.5).epsilon(1e-12));
  CHECK(st.eta[1] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(st.eta[2] == doctest::Approx(0.5).epsilon(1e-12));

  // k = n-3 convex-combination display at n = 10
  {
    int n = 10;
    PartitionSpec spec(n, 7);
    auto x = gfc_x(0.25, 4);
    auto y = odds_from_x(x);
    double w1n = 6.0 / (n - 5) * y[0], w2n = 6.0 / ((n - 4) * (n - 5)) * y[1];
    double den = 1 + w1n + w2n, w1 = w1n / den, w2 = w2n / den;
    std::vector<double> pred{n - 6 + w1 + 2 * w2, 3 - 2 * w1 - 3 * w2, w1, w2};
    auto mm = moment_map(spec, x);
    for (int i = 0; i < 4; ++i) CHECK(mm.eta[i] == doctest::Approx(pred[i]).epsilon(1e-10));
  }

  // Maxwell-Boltzmann limit of the gfc family
  {
    int n = 9, k = 4;
    auto mb = maxwell_boltzmann_eta(n, k);
    auto dist = AHypDistribution::from_log_x(PartitionSpec(n, k),
                                             log_indeterminates_gfc(-1e8, n - k + 1));
    auto e = dist.eta();
    for (int i = 0; i < n - k + 1; ++i)
      CHECK(e[i] == doctest::Approx(mb[i]).epsilon(1e-6));
  }

  // constraints + interior membership + pfaffian cross-check on random x
  std::mt19937_64 rng(73);
  std::uniform_real_distribution<double> u(0.2, 2.0);
  for (int rep = 0; rep < 200; ++rep) {
    int n = 6 + static_cast<int>(rng() % 7), k = 2 + static_cast<int>(rng() % (n - 3));
    PartitionSpec spec(n, k);
    std::vector<double> x(spec.width());
    for (auto& v : x) v = u(rng);
    auto mm = moment_map(spec, x);  // throws if the pfaffian cross-check fails
    double s0 = 0, s1 = 0;
    for (int i = 0; i < spec.width(); ++i) {
      s0 += mm.eta[i];
      s1 += (i + 1) * mm.eta[i];
    }
    CHECK(std::fabs(s0 - k) < 1e-10 * k);
    CHECK(std::fabs(s1 - n) < 1e-10 * n);
    CHECK(polytope_membership(spec, mm.eta) == Membership::Interior);
  }
}

TEST_CASE("fisher metric equals the enumerated covariance and has the right rank") {
  std::mt19937_64 rng(79);
  std::uniform_real_distribution<double> u(0.3, 1.8);
  for (int rep = 0; rep < 10; ++rep) {
    int n = 7 + static_cast<int>(rng() % 4), k = 3 + static_cast<int>(rng() % 3);
    PartitionSpec spec(n, k);
    std::vector<double> x(spec.width());
    for (auto& v : x) v = u(rng);
    AHypDistribution dist(spec, x);
    Mat<double> g = dist.fisher();
    // covariance by exhaustive enumeration
    int w = spec.width();
    std::vector<double> mean(w, 0.0);
    Mat<double> cov(w, w);
    for (const auto& s : enumerate_support(spec)) {
      double p = std::exp(dist.log_pmf(s));
      for (int i = 0; i < w; ++i) mean[i] += p * s[i];
    }
    for (const auto& s : enumerate_support(spec)) {
      double p = std::exp(dist.log_pmf(s));
      for (int i = 0; i < w; ++i)
        for (int j = 0; j < w; ++j) cov(i, j) += p * (s[i] - mean[i]) * (s[j] - mean[j]);
    }
    double gscale = 0;
    for (double v : g.a) gscale = std::max(gscale, std::fabs(v));
    for (int i = 0; i < w; ++i)
      for (int j = 0; j < w; ++j) CHECK(std::fabs(g(i, j) - cov(i, j)) < 1e-10 * gscale);

    // kernel contains the rows of A ...
    std::vector<double> a1(w), a2(w, 1.0);
    for (int i = 0; i < w; ++i) a1[i] = i;
    for (int i = 0; i < w; ++i) {
      double r1 = 0, r2 = 0;
      for (int j = 0; j < w; ++j) {
        r1 += g(i, j) * a1[j];
        r2 += g(i, j) * a2[j];
      }
      CHECK(std::fabs(r1) < 1e-8 * gscale * w);
      CHECK(std::fabs(r2) < 1e-8 * gscale * w);
    }
    // ... and the rank is n-k-1
    auto ev = sym_eigenvalues(g);
    int rank = 0;
    for (double e : ev)
      if (std::fabs(e) > 1e-8 * gscale) ++rank;
    CHECK(rank == n - k - 1);
  }
}

TEST_CASE("finite-difference gradient of psi equals eta") {
  PartitionSpec spec(9, 5);
  auto x = gfc_x(0.3, spec.width());
  AHypDistribution dist(spec, x);
  auto e = dist.eta();
  double h = 1e-5;
  for (int i = 0; i < spec.width(); ++i) {
    auto xp = x, xm = x;
    xp[i] *= std::exp(h);
    xm[i] *= std::exp(-h);
    double fd = (AHypDistribution(spec, xp).log_Z() - AHypDistribution(spec, xm).log_Z()) / (2 * h);
    CHECK(std::fabs(fd - e[i]) < 1e-6);
  }
}

TEST_CASE("moment map injectivity evidence on (8,5)") {
  std::mt19937_64 rng(83);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  PartitionSpec spec(8, 5);
  std::vector<std::vector<double>> ys, etas;
  for (int rep = 0; rep < 40; ++rep) {
    std::vector<double> y(2);
    for (auto& v : y) v = std::exp(u(rng));
    auto mm = moment_map(spec, canonical_x(y, spec.width()));
    ys.push_back(y);
    etas.push_back(mm.eta);
  }
  for (size_t a = 0; a < ys.size(); ++a)
    for (size_t b = a + 1; b < ys.size(); ++b) {
      double dy = std::fabs(ys[a][0] - ys[b][0]) + std::fabs(ys[a][1] - ys[b][1]);
      if (dy < 1e-6) continue;
      double de = 0;
      for (size_t i = 0; i < etas[a].size(); ++i) de += std::fabs(etas[a][i] - etas[b][i]);
      CHECK(de > 0);
    }
}

TEST_CASE("full MLE: closed form on the k = n-2 family, both algorithms") {
  for (int n : {6, 20, 50}) {
    PartitionSpec spec(n, n - 2);
    for (int num = 1; num <= 9; num += 2) {
      double N1 = num, N2 = 10.0 - num;
      // sbar = (N1 (n-3,0,1) + N2 (n-4,2,0)) / N
      double N = N1 + N2;
      std::vector<double> sbar{(N1 * (n - 3) + N2 * (n - 4)) / N, 2 * N2 / N, N1 / N};
      double expect = (N1 / N2) * (n - 3) / 2.0;
      for (MleAlgo algo : {MleAlgo::Newton, MleAlgo::Gradient}) {
        auto res = mle_full(spec, sbar, algo, 1e-12, 200000);
        REQUIRE(res.status == MleStatus::Converged);
        CHECK(std::fabs(res.y[0] - expect) < 1e-8 * std::max(1.0, expect));
      }
    }
    // N1 = 0 or N2 = 0: boundary, no MLE
    std::vector<double> s0{static_cast<double>(n - 4), 2.0, 0.0};
    CHECK(mle_full(spec, s0).status == MleStatus::NoMle);
    std::vector<double> s1{static_cast<double>(n - 3), 0.0, 1.0};
    CHECK(mle_full(spec, s1).status == MleStatus::NoMle);
  }
}

TEST_CASE("full MLE recovers a known point from its own moment map") {
  std::mt19937_64 rng(89);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int rep = 0; rep < 6; ++rep) {
    int n = 7 + static_cast<int>(rng() % 4), k = 3 + static_cast<int>(rng() % 3);
    PartitionSpec spec(n, k);
    std::vector<double> ystar(spec.width() - 2);
    for (auto& v : ystar) v = std::exp(u(rng));
    auto mm = moment_map(spec, canonical_x(ystar, spec.width()));
    auto res = mle_full(spec, mm.eta, MleAlgo::Newton, 1e-11, 50000);
    REQUIRE(res.status == MleStatus::Converged);
    for (size_t i = 0; i < ystar.size(); ++i)
      CHECK(std::fabs(res.y[i] - ystar[i]) < 1e-7 * std::max(1.0, ystar[i]));
  }
}

TEST_CASE("curved MLE (gfc): published point estimate and existence") {
  // alpha-hat = 0.073 at (10,7), sbar = (4.8, 1.6, 0.4, 0.2)
  auto res = mle_curved_gfc(PartitionSpec(10, 7), {4.8, 1.6, 0.4, 0.2});
  REQUIRE(res.status == MleStatus::Converged);
  CHECK(res.alpha == doctest::Approx(0.073).epsilon(0.015));
  CHECK(std::fabs(res.alpha - 0.073) < 1e-3);

  auto cub = mle_exists_cubic(10, {4.8, 1.6, 0.4, 0.2});
  CHECK(cub.exists);
  CHECK(cub.coeffs[0] == doctest::Approx(-26.0).epsilon(1e-12));
  CHECK(cub.coeffs[1] == doctest::Approx(99.6).epsilon(1e-12));
  CHECK(cub.coeffs[2] == doctest::Approx(-89.2).epsilon(1e-12));
  CHECK(cub.coeffs[3] == doctest::Approx(6.0).epsilon(1e-12));
  // f(alpha-hat) = 0 for the cubic as well
  double f = 0, a = res.alpha;
  f = ((cub.coeffs[0] * a + cub.coeffs[1]) * a + cub.coeffs[2]) * a + cub.coeffs[3];
  CHECK(std::fabs(f) < 1e-6);

  // s = (n-5,1,1,0) has an MLE for n >= 7 (single observation)
  for (int n = 7; n <= 12; ++n) {
    std::vector<double> s{static_cast<double>(n - 5), 1.0, 1.0, 0.0};
    CHECK(mle_exists_cubic(n, s).exists);
    auto r = mle_curved_gfc(PartitionSpec(n, n - 3), s);
    CHECK(r.status == MleStatus::Converged);
  }
  // s = (n-4,0,0,1) has none
  for (int n = 7; n <= 12; ++n) {
    std::vector<double> s{static_cast<double>(n - 4), 0.0, 0.0, 1.0};
    CHECK_FALSE(mle_exists_cubic(n, s).exists);
    auto r = mle_curved_gfc(PartitionSpec(n, n - 3), s);
    CHECK(r.status == MleStatus::NoMle);
  }
  // boundary of the existence condition: strict inequality
  {
    int n = 10;
    double rhs = 2.0 * (2 * n - 5) / ((n - 2) * (n - 3));
    double s4 = 0.1, s3 = rhs - 3 * s4;  // sbar3 + 3 sbar4 lands exactly on the boundary
    CHECK_FALSE(mle_exists_cubic(n, {0.0, 0.0, s3, s4}).exists);
  }
}

TEST_CASE("curved MLE agrees with the cubic predicate on a grid (k = n-3)") {
  for (int n : {8, 10, 12}) {
    PartitionSpec spec(n, n - 3);
    std::mt19937_64 rng(n);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    int tried = 0;
    while (tried < 100) {
      // random point of the simplex of (s2,s3,s4) with s2+2s3+3s4 = 3
      double s4 = u(rng), s3 = u(rng) * (3 - 3 * s4) / 2;
      double s2 = 3 - 2 * s3 - 3 * s4;
      if (s2 < 0) continue;
      double s1 = spec.k - s2 - s3 - s4;
      if (s1 < 0) continue;
      ++tried;
      std::vector<double> sbar{s1, s2, s3, s4};
      bool pred = mle_exists_cubic(n, sbar).exists;
      auto r = mle_curved_gfc(spec, sbar);
      // treat near-boundary points as undecidable at solver resolution
      double margin = std::fabs(s3 + 3 * s4 - 2.0 * (2 * n - 5) / ((n - 2) * (n - 3)));
      if (margin < 1e-3) continue;
      CHECK((r.status == MleStatus::Converged) == pred);
    }
  }
}

TEST_CASE("asymptotic variance") {
  // closed form on the k = n-2 curve: g_aa = (3(n-3)/4) eta3^2 / ((a-1)(a-2)^3)
  for (int n : {6, 12, 30}) {
    PartitionSpec spec(n, n - 2);
    for (double alpha : {-1.0, 0.0, 0.4}) {
      auto x = gfc_x(alpha, 3);
      double y1 = x[0] * x[2] / (x[1] * x[1]);
      double eta3 = 1.0 / (1.0 + (n - 3) / (2 * y1));
      double expect = (3.0 * (n - 3) / 4.0) * eta3 * eta3 /
                      ((alpha - 1) * std::pow(alpha - 2, 3));
      double got = asymptotic_variance_gfc(spec, alpha);
      CHECK(got == doctest::Approx(expect).epsilon(1e-8));
    }
  }
  // singular limits of the curve: the information blows up at alpha -> 1
  // (variance 1/g_aa -> 0) and vanishes at alpha -> -inf (variance diverges);
  // both follow from the closed form above and from direct evaluation
  CHECK(asymptotic_variance_gfc(PartitionSpec(9, 7), 1 - 1e-6) > 1e4);
  CHECK(asymptotic_variance_gfc(PartitionSpec(9, 7), -1e5) < 1e-6);
  // k = n-3, large n: 1/g_aa ~ n (a-1)^3 (a-2)/4
  {
    int n = 200;
    double alpha = 0.3;
    double gaa = asymptotic_variance_gfc(PartitionSpec(n, n - 3), alpha);
    double approx = n * std::pow(alpha - 1, 3) * (alpha - 2) / 4.0;
    CHECK(std::fabs(1.0 / gaa - approx) / std::fabs(1.0 / gaa) < 0.1);
  }
}

TEST_CASE("dirichlet-multinomial existence and MLE cross-check") {
  // sbar = n e_1 (all singletons): sum i^2 sbar = n -> false for all m
  for (int m : {1, 2, 5})
    CHECK_FALSE(dm_mle_exists(4, m, {4, 0, 0, 0}));
  // sbar = e_n: the printed inequality holds for m >= 2
  for (int m : {2, 3, 10}) CHECK(dm_mle_exists(4, m, {0, 0, 0, 1}));
  CHECK_FALSE(dm_mle_exists(4, 1, {0, 0, 0, 1}));

  // numerical cross-check on averaged (non-degenerate) data, n = 6, m = 3
  int n = 6;
  DirichletMultinomialModel model{3};
  std::vector<std::vector<double>> cases = {
      {1, 1, 1, 0, 0, 0}, {2, 2, 0, 0, 0, 0}, {0, 3, 0, 0, 0, 0},
      {0, 0, 2, 0, 0, 0}, {0.5, 0.25, 0.5, 0.75, 0, 0}, {1, 0.5, 0, 1, 0, 0}};
  for (auto& sbar : cases) {
    double tot = 0;
    for (int i = 1; i <= n; ++i) tot += i * sbar[i - 1];
    if (std::fabs(tot - n) > 1e-9) continue;
    bool pred = dm_mle_exists(n, model.m, sbar);
    auto r = mle_curved_dm(n, model, sbar);
    CHECK((r.status == MleStatus::Converged) == pred);
  }
}

TEST_CASE("dm moments: boundary identity of the Maxwell-Boltzmann limit") {
  // alpha -> -inf of the DM family: eta_i = C(n,i) (m-1)^{n-i}/m^{n-1},
  // and sum i^2 eta_i = n + n(n-1)/m exactly.
  for (int n : {4, 8, 12})
    for (int m : {2, 3, 5}) {
      double s = 0;
      for (int i = 1; i <= n; ++i) {
        double lb = std::lgamma(n + 1.0) - std::lgamma(i + 1.0) - std::lgamma(n - i + 1.0);
        double eta = std::exp(lb + (n - i) * std::log(m - 1.0) - (n - 1) * std::log((double)m));
        s += static_cast<double>(i) * i * eta;
      }
      CHECK(s == doctest::Approx(n + static_cast<double>(n) * (n - 1) / m).epsilon(1e-10));
    }
  // and the finite-alpha DM moment map approaches it
  DmMoments mom = dm_moments(8, DirichletMultinomialModel{3}, -1e7);
  double s = 0;
  for (int i = 1; i <= 8; ++i) s += static_cast<double>(i) * i * mom.eta[i - 1];
  CHECK(s == doctest::Approx(8 + 8.0 * 7 / 3).epsilon(1e-5));
}
