// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The monolct Authors

#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "monolct/grid.hpp"

namespace monolct::test {

constexpr double kPi = std::numbers::pi;
inline const cdouble kI(0.0, 1.0);

inline double cabs_diff(cdouble x, cdouble y) { return std::abs(x - y); }

// sum of Gaussian-enveloped tones; decays well inside the window
inline SampledSignal1D random_tones(std::mt19937_64& rng, std::size_t n, double dx) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  auto s = SampledSignal1D::centered(n, dx);
  const double half = static_cast<double>(n) * dx / 2.0;
  for (int k = 0; k < 3; ++k) {
    const double c = 0.3 * half * u(rng);
    const double w = 0.05 * half * (1.5 + u(rng));
    const double nu = 2.0 * u(rng);
    const cdouble amp(u(rng), u(rng));
    for (std::size_t j = 0; j < n; ++j) {
      const double x = s.coord(j);
      s.samples[j] += amp * std::exp(-(x - c) * (x - c) / (2.0 * w * w)) * std::exp(kI * nu * x);
    }
  }
  return s;
}

inline Field2D gaussian_field(std::size_t n, double dx, double sigma, double cx = 0.0, double cy = 0.0) {
  Field2D f(n, n, dx, dx);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double u = f.x1(j) - cx;
      const double v = f.x2(i) - cy;
      f.at(i, j) = std::exp(-(u * u + v * v) / (2.0 * sigma * sigma));
    }
  }
  return f;
}

inline double max_abs_diff(const std::vector<cdouble>& x, const std::vector<cdouble>& y) {
  double m = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) m = std::max(m, std::abs(x[k] - y[k]));
  return m;
}

}  // namespace monolct::test
