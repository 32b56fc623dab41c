// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The monolct Authors

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace monolct {

using cdouble = std::complex<double>;

class InvalidParams : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class GridMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Real LCT parameters {a, b, c, d} with ad - bc = 1.
class LctParams {
 public:
  static constexpr double kUnimodularTol = 1e-12;

  /// Validates ad - bc = 1 and b >= 0.
  LctParams(double a, double b, double c, double d);

  /// (0, 1, -1, 0): the unitary Fourier transform times 1/sqrt(i).
  static LctParams fourier() { return {0.0, 1.0, -1.0, 0.0}; }
  /// Completes (a, b) with d = 1 and c = (ad - 1)/b. Requires b > 0.
  static LctParams complete(double a, double b, double d = 1.0);

  double a() const { return a_; }
  double b() const { return b_; }
  double c() const { return c_; }
  double d() const { return d_; }

  /// Throws InvalidParams unless b > 0.
  void require_positive_b() const;

 private:
  double a_, b_, c_, d_;
};

/// Uniformly sampled complex signal with sample j at x_min + j*dx.
struct SampledSignal1D {
  std::vector<cdouble> samples;
  double x_min = 0.0;
  double dx = 1.0;

  SampledSignal1D() = default;
  SampledSignal1D(std::vector<cdouble> s, double x_min_, double dx_);

  /// N samples at x_j = (j - N/2) dx.
  static SampledSignal1D centered(std::size_t n, double dx);

  std::size_t size() const { return samples.size(); }
  double coord(std::size_t j) const { return x_min + static_cast<double>(j) * dx; }
  /// sum |f|^2 dx
  double energy() const;
};

/// Complex H x W field, row-major, on a centered grid:
/// column j sits at x1 = (j - W/2) dx, row i at x2 = (i - H/2) dy.
struct Field2D {
  std::size_t rows = 0;
  std::size_t cols = 0;
  double dx = 1.0;
  double dy = 1.0;
  std::vector<cdouble> data;

  Field2D() = default;
  Field2D(std::size_t rows_, std::size_t cols_, double dx_ = 1.0, double dy_ = 1.0);

  cdouble& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  cdouble at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

  double x1(std::size_t j) const { return (static_cast<double>(j) - static_cast<double>(cols / 2)) * dx; }
  double x2(std::size_t i) const { return (static_cast<double>(i) - static_cast<double>(rows / 2)) * dy; }

  std::size_t size() const { return data.size(); }
  bool same_grid(const Field2D& o) const;
  /// sum |f|^2 dx dy
  double energy() const;
};

/// Real-valued image (strength maps, PGM contents), row-major.
struct RealImage {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  RealImage() = default;
  RealImage(std::size_t r, std::size_t c, double v = 0.0) : rows(r), cols(c), data(r * c, v) {}

  double& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  double at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

/// Real part of every sample, on the same grid shape.
RealImage real_part(const Field2D& f);
/// Image values as a complex field with the given spacing.
Field2D to_field(const RealImage& img, double dx = 1.0, double dy = 1.0);

/// ||x - y||_2 / ||y||_2 over the complex samples (0 when both vanish).
double relative_l2(const std::vector<cdouble>& x, const std::vector<cdouble>& y);

}  // namespace monolct
