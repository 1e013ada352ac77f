#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <random>
#include <vector>

#include "sesim/types.hpp"

namespace sesim::test {

// Equally-distributed-equivalent by grid refinement on the welfare equation.
inline double brute_force_atkinson(const std::vector<double>& y, double eps,
                                   std::vector<double> w = {}) {
  if (w.empty()) w.assign(y.size(), 1.0);
  auto u = [eps](double v) {
    return std::abs(eps - 1.0) < 1e-12 ? std::log(v) : std::pow(v, 1.0 - eps) / (1.0 - eps);
  };
  double wsum = 0.0, welfare = 0.0, mean = 0.0;
  double lo = y[0], hi = y[0];
  for (std::size_t i = 0; i < y.size(); ++i) {
    wsum += w[i];
    welfare += w[i] * u(y[i]);
    mean += w[i] * y[i];
    lo = std::min(lo, y[i]);
    hi = std::max(hi, y[i]);
  }
  welfare /= wsum;
  mean /= wsum;
  constexpr int kGrid = 100;
  while (hi - lo > 1e-13 * mean) {
    const double step = (hi - lo) / kGrid;
    int k = 0;
    while (k < kGrid && u(lo + (k + 1) * step) < welfare) ++k;
    const double next_lo = lo + k * step;
    hi = std::min(hi, next_lo + step);
    lo = next_lo;
  }
  return 1.0 - 0.5 * (lo + hi) / mean;
}

inline Eigen::MatrixXd to_eigen(const Matrix& a) {
  Eigen::MatrixXd m(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  return m;
}

inline Vector dense_leontief(const Matrix& a, const Vector& f) {
  const auto n = static_cast<Eigen::Index>(a.rows());
  Eigen::VectorXd ef(n);
  for (Eigen::Index i = 0; i < n; ++i) ef(i) = f[i];
  const Eigen::VectorXd x = (Eigen::MatrixXd::Identity(n, n) - to_eigen(a)).inverse() * ef;
  return Vector(x.data(), x.data() + n);
}

// Nonnegative matrix with column sums at most `max_col`.
inline Matrix random_productive(std::size_t n, std::mt19937_64& rng, double max_col = 0.9) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Matrix a(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    double col = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      a(i, j) = u(rng) < 0.25 ? 0.0 : u(rng);
      col += a(i, j);
    }
    const double target = max_col * u(rng);
    if (col > 0.0)
      for (std::size_t i = 0; i < n; ++i) a(i, j) *= target / col;
  }
  return a;
}

}  // namespace sesim::test
