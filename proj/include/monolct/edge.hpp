// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The monolct Authors

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "monolct/grid.hpp"
#include "monolct/monogenic.hpp"

namespace monolct {

/// Clifford-valued field stored as one complex Field2D per basis blade
/// (grade-then-lexicographic order, 2^n blades).
struct CliffordField {
  int n = 2;
  std::vector<Field2D> blades;

  static CliffordField zeros(int n, const Field2D& grid);
  std::size_t rows() const { return blades.front().rows; }
  std::size_t cols() const { return blades.front().cols; }
};

/// sum_j e_j (d/dx_j) f with central differences and replicated borders.
/// Only the first two axes of the grid exist, so e3 terms vanish for n = 3.
CliffordField dirac_apply(const CliffordField& f);

enum class EdgeMethod { Lca, Mdcpc };

const char* to_string(EdgeMethod m);

struct EdgeOptions {
  double percentile = 99.0;
  double threshold = 0.3;
  Boundary boundary = Boundary::Reflect;
  double delta_ratio = 0.01;
  double eps = 1e-12;
};

/// Scalar edge strength in [0, 1] after percentile normalization.
struct EdgeMap {
  RealImage strength;
  RealImage raw;  // before normalization
  EdgeMethod method = EdgeMethod::Lca;
  double a = 0.0;
  double b = 1.0;
  double x0 = 1.0;
  std::optional<double> threshold;
  double percentile = 99.0;
  double scale = 0.0;  // raw value mapped to 1
  bool include_linear_term = false;
};

/// Divides by the given percentile of the raw values (nearest rank; the
/// maximum when that percentile is 0) and clamps to [0, 1].
RealImage percentile_normalize(const RealImage& raw, double percentile, double* scale = nullptr);

/// Raw ||D rho|| per pixel (complex-modulus Euclidean norm), 0 where invalid.
RealImage lca_raw(const Field2D& f, const LctParams& p, double x0, const EdgeOptions& opts = {});
/// Raw ||MDCPC|| per pixel, 0 where invalid.
RealImage mdcpc_raw(const Field2D& f, const LctParams& p, double x0, bool include_linear_term,
                    const EdgeOptions& opts = {});

EdgeMap lca_map(const Field2D& f, const LctParams& p, double x0, const EdgeOptions& opts = {});
EdgeMap mdcpc_map(const Field2D& f, const LctParams& p, double x0, bool include_linear_term = false,
                  const EdgeOptions& opts = {});

enum class SynthKind { Step, Disk, Bars, Ramp };

SynthKind parse_synth_kind(const std::string& s);
const char* to_string(SynthKind k);

struct SynthSpec {
  SynthKind kind = SynthKind::Step;
  std::size_t size = 128;
  double low = 64.0;    // gray levels, 0..255
  double high = 192.0;
  double radius = 0.0;  // disk; 0 means size/4
  std::size_t period = 16;  // bar width
  std::size_t ramp_width = 8;
  double noise_sigma = 0.0;  // gray levels
  std::uint64_t seed = 0;
};

struct GroundTruth {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint8_t> edge;
  std::string description;

  std::size_t count() const;
};

struct SynthImage {
  Field2D image;  // gray level / 255 on a unit-spaced centered grid
  GroundTruth truth;
};

/// Deterministic test scenes with exact edge pixels (first pixel of each new
/// level). Seeded Gaussian noise is added after the truth is fixed.
SynthImage synth_image(const SynthSpec& spec);

/// Pixels with strength >= threshold.
std::vector<std::uint8_t> detect(const RealImage& strength, double threshold);

/// Distance from each flagged pixel to the nearest truth pixel.
std::vector<double> distances_to_truth(const std::vector<std::uint8_t>& detected, const GroundTruth& truth);

/// (1/max(Nd, Nt)) sum_i 1/(1 + d_i^2/9); 0 for an empty detection.
double pratt_fom(const EdgeMap& candidate, const GroundTruth& truth, double threshold);
double pratt_fom(const std::vector<std::uint8_t>& detected, const GroundTruth& truth);

/// Column whose mean value is largest (first one on ties).
std::size_t argmax_column(const RealImage& strength);
/// Same, on the unclamped map so saturated pixels do not tie.
std::size_t argmax_column(const EdgeMap& m);

/// Mean distance of thresholded pixels to the truth; +inf for an empty detection.
double mean_boundary_distance(const EdgeMap& m, const GroundTruth& truth, double threshold);

}  // namespace monolct
