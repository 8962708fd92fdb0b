#include <cmath>
#include <random>

#include "bellhgm/asymptotics.hpp"
#include "bellhgm/odds.hpp"
#include "bellhgm/recurrence.hpp"
#include "bellhgm/special_values.hpp"
#include "doctest.h"

using namespace bellhgm;

namespace {

// closed form of the (4,2)-reduced log-affine fit: m = (2√y, 2, 2√y)/(1+2√y)
std::vector<double> fit_closed_form_42(double y1) {
  double sy = std::sqrt(y1);
  return {2 * sy / (1 + 2 * sy), 2 / (1 + 2 * sy), 2 * sy / (1 + 2 * sy)};
}

}  // namespace

TEST_CASE("ips_fit satisfies its constraints and keeps the odds") {
  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int rep = 0; rep < 100; ++rep) {
    int n = 6 + static_cast<int>(rng() % 6);
    int k = 2 + static_cast<int>(rng() % (n - 3));
    PartitionSpec spec(n, k);
    std::vector<double> y(spec.width() - 2);
    for (auto& v : y) v = std::exp(u(rng));
    auto fit = ips_fit(spec, y);
    double s0 = 0, s1 = 0;
    for (int i = 0; i < spec.width(); ++i) {
      s0 += fit.m[i];
      s1 += i * fit.m[i];
    }
    CHECK(std::fabs(s0 - spec.k) < 1e-10);
    CHECK(std::fabs(s1 - (spec.n - spec.k)) < 1e-10);
    auto ym = odds_from_x(fit.m);
    for (size_t i = 0; i < y.size(); ++i)
      CHECK(std::fabs(ym[i] - y[i]) < 1e-10 * std::max(1.0, y[i]));
  }
}

TEST_CASE("ips_fit closed form on the (4,2) family") {
  for (double y1 : {0.1, 1.0, 10.0}) {
    auto fit = ips_fit(PartitionSpec(4, 2), {y1});
    auto cf = fit_closed_form_42(y1);
    for (int i = 0; i < 3; ++i) CHECK(std::fabs(fit.m[i] - cf[i]) < 1e-10);
    // stated theta closed form: theta1 = 0, theta2 = log(2 y^{1/3}/(1+2 sqrt y))
    CHECK(std::fabs(fit.theta[0] - 0.0) < 1e-9);
    CHECK(fit.theta[1] ==
          doctest::Approx(std::log(2 * std::cbrt(y1) / (1 + 2 * std::sqrt(y1)))).epsilon(1e-8));
  }
  // fixed point at y = 1: m1 = m3, sum = 2, m2 + 2 m3 = 2
  auto fit = ips_fit(PartitionSpec(4, 2), {1.0});
  CHECK(std::fabs(fit.m[0] - fit.m[2]) < 1e-11);
  CHECK(std::fabs(fit.m[1] + 2 * fit.m[2] - 2.0) < 1e-11);
}

TEST_CASE("gaussian approximation reproduces the published column") {
  // alpha = 0.5 (calibrated determinant) and alpha = -1 (both determinants equal)
  auto x05 = indeterminates_gfc(0.5, 3);
  CHECK(gaussian_approx_logZ(PartitionSpec(40, 20), x05, 10) ==
        doctest::Approx(-43.4749).epsilon(2e-4));
  CHECK(gaussian_approx_logZ(PartitionSpec(800, 400), x05, 200) ==
        doctest::Approx(-2018.27).epsilon(2e-5));
  auto xm1 = indeterminates_gfc(-1.0, 3);
  CHECK(gaussian_approx_logZ(PartitionSpec(40, 20), xm1, 10) ==
        doctest::Approx(-20.5405).epsilon(1e-4));
  CHECK(gaussian_approx_logZ(PartitionSpec(800, 400), xm1, 200) ==
        doctest::Approx(-1561.20).epsilon(1e-5));
  // the metric determinant differs by a constant ~0.033 on this family
  double cal = gaussian_approx_logZ(PartitionSpec(40, 20), x05, 10, IpsDetMode::Calibrated);
  double met = gaussian_approx_logZ(PartitionSpec(40, 20), x05, 10, IpsDetMode::Metric);
  CHECK(cal - met == doctest::Approx(-0.033).epsilon(0.05));
  // same reduced pair and gamma => same value regardless of how (n,k) is written
  CHECK(gaussian_approx_logZ(PartitionSpec(40, 20), x05, 10) ==
        doctest::Approx(gaussian_approx_logZ(PartitionSpec(40, 20), x05, 10.0)).epsilon(1e-15));
  CHECK_THROWS_AS(gaussian_approx_logZ(PartitionSpec(40, 20), x05, 7), std::domain_error);
}

TEST_CASE("gaussian approximation error decreases along gamma (Table-3 trend)") {
  auto x05 = indeterminates_gfc(0.5, 3);
  double prev = 1e9;
  for (int gamma : {10, 25, 100, 200}) {
    int n = 4 * gamma, k = 2 * gamma;
    double exact = special_value(SpecialPoint::HalfRising, n, k).log();
    double ips = gaussian_approx_logZ(PartitionSpec(n, k), x05, gamma);
    double rel = std::fabs(ips - exact) / std::fabs(exact);
    CHECK(rel < prev);
    prev = rel;
  }
  CHECK(prev == doctest::Approx(0.124).epsilon(0.02));
}

TEST_CASE("gfc asymptotic forms, published cells") {
  CHECK(gfc_asymptotic_logZ(40, 20, 0.5, GfcAsymptoticForm::MittagLeffler) ==
        doctest::Approx(-34.7758).epsilon(3e-4));
  CHECK(gfc_asymptotic_logZ(40, 20, 0.5, GfcAsymptoticForm::FixedKPos) ==
        doctest::Approx(-32.2758).epsilon(1e-5));
  CHECK(gfc_asymptotic_logZ(40, 20, -1.0, GfcAsymptoticForm::FixedKNeg) ==
        doctest::Approx(-11.5868).epsilon(1e-4));
  CHECK(gfc_asymptotic_logZ(800, 400, 0.5, GfcAsymptoticForm::MittagLeffler) ==
        doctest::Approx(-1778.54).epsilon(3e-5));
  CHECK_THROWS_AS(gfc_asymptotic_logZ(40, 20, -0.5, GfcAsymptoticForm::FixedKPos),
                  std::domain_error);
  CHECK_THROWS_AS(gfc_asymptotic_logZ(40, 20, 0.5, GfcAsymptoticForm::FixedKNeg),
                  std::domain_error);
}

TEST_CASE("mittag-leffler density: closed form at alpha = 1/2 and normalization") {
  for (double u : {0.5, 1.0, 2.0, 3.16227766, 5.0}) {
    double cf = std::exp(-u * u / 4) / std::sqrt(M_PI);
    CHECK(mittag_leffler_pdf(0.5, u) == doctest::Approx(cf).epsilon(1e-10));
  }
  // integrates to 1 over (0, U) with the tail below 1e-6
  double U = 8.0, h = U / 400;
  double integral = 0;
  for (int i = 0; i < 400; ++i) {
    double a = i * h + 1e-12, b = (i + 1) * h;
    integral += (b - a) / 6 *
                (mittag_leffler_pdf(0.5, a) + 4 * mittag_leffler_pdf(0.5, (a + b) / 2) +
                 mittag_leffler_pdf(0.5, b));
  }
  CHECK(integral == doctest::Approx(1.0).epsilon(1e-3));
}
