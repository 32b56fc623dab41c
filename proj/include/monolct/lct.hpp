// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The monolct Authors

#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "monolct/grid.hpp"

namespace monolct {

enum class Direction { Forward, Inverse };

/// Output grid spacing of the b > 0 transform: 2 pi b / (N dx).
double lct_frequency_step(const LctParams& p, std::size_t n, double dx);

/// Pre-chirp phase step a * x_max * dx / (2b) in radians; above pi/4 the
/// chirp is too coarsely sampled for the discrete transform to track the
/// continuous one.
double chirp_phase_step(const LctParams& p, double x_max, double dx);

/// Precomputed chirp-FFT-chirp transform for one spatial grid.
///
/// Forward maps samples on x_j = x_min + j dx to omega_k = (k - N/2) dw,
/// dw = 2 pi b/(N dx):
///   F(omega) = e^{i d omega^2/2b} / sqrt(i 2 pi b) * sum_j e^{-i omega x_j/b} e^{i a x_j^2/2b} f_j dx.
/// Inverse applies the (d, -b, -c, a) kernel on the same pair of grids.
/// For b = 0 the transform is sqrt(d) e^{i c d w^2/2} f(d w) on the input grid.
class Lct1d {
 public:
  Lct1d(const LctParams& p, std::size_t n, double dx, double x_min);

  const LctParams& params() const { return p_; }
  std::size_t size() const { return n_; }
  double dx() const { return dx_; }
  double x_min() const { return x_min_; }
  /// Spacing and first node of the transform-domain grid.
  double dw() const { return dw_; }
  double w_min() const { return w_min_; }

  /// Set when the pre-chirp phase step exceeds pi/4.
  const std::optional<std::string>& sampling_warning() const { return warning_; }

  std::vector<cdouble> forward(std::span<const cdouble> f) const;
  std::vector<cdouble> inverse(std::span<const cdouble> F) const;

 private:
  std::vector<cdouble> resample_b0(std::span<const cdouble> f, double scale, double c_chirp) const;

  LctParams p_;
  std::size_t n_;
  double dx_, x_min_, dw_, w_min_;
  std::vector<cdouble> pre_, post_, ipre_, ipost_;
  std::optional<std::string> warning_;
};

SampledSignal1D lct_forward_1d(const SampledSignal1D& f, const LctParams& p);

/// F must sit on the centered grid produced by lct_forward_1d. The spatial
/// grid is centered unless x_min is given.
SampledSignal1D lct_inverse_1d(const SampledSignal1D& F, const LctParams& p,
                               std::optional<double> x_min = std::nullopt);

/// Separable 2D transform with constant (1/sqrt(i 2 pi b))^2. Requires b > 0.
/// Forward output spacing is 2 pi b/(N d) per axis; the inverse maps back.
Field2D lct_2d(const Field2D& f, const LctParams& p, Direction dir);

/// Trapezoidal evaluation of the kernel integral at arbitrary omegas; O(N M).
std::vector<cdouble> lct_quadrature_oracle(const SampledSignal1D& f, const LctParams& p,
                                           std::span<const double> omegas);

}  // namespace monolct
