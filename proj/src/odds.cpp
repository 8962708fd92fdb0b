#include "bellhgm/odds.hpp"

#include <cmath>
#include <stdexcept>

namespace bellhgm {

std::vector<double> log_odds_from_log_x(const std::vector<double>& logx) {
  int m = static_cast<int>(logx.size());
  if (m < 3) return {};
  std::vector<double> ly(m - 2);
  for (int i = 1; i <= m - 2; ++i)
    ly[i - 1] = i * logx[0] + logx[i + 1] - (i + 1) * logx[1];
  return ly;
}

std::vector<double> odds_from_x(const std::vector<double>& x) {
  std::vector<double> logx(x.size());
  for (size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0)) throw std::domain_error("odds_from_x: x must be strictly positive");
    logx[i] = std::log(x[i]);
  }
  auto ly = log_odds_from_log_x(logx);
  for (double& v : ly) v = std::exp(v);
  return ly;
}

std::vector<double> canonical_x(const std::vector<double>& y, int width) {
  if (width < 2 || static_cast<int>(y.size()) != width - 2)
    throw std::domain_error("canonical_x: y must have length width-2");
  std::vector<double> x(width, 1.0);
  for (int i = 0; i < width - 2; ++i) {
    if (!(y[i] > 0)) throw std::domain_error("canonical_x: y must be strictly positive");
    x[i + 2] = y[i];
  }
  return x;
}

std::vector<double> torus_scale(const std::vector<double>& x, double s1, double s2) {
  std::vector<double> out(x.size());
  double p = 1.0;
  for (size_t i = 0; i < x.size(); ++i) {
    out[i] = x[i] * p * s2;
    p *= s1;
  }
  return out;
}

}  // namespace bellhgm
