// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The monolct Authors

#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "monolct/grid.hpp"
#include "monolct/monogenic.hpp"

namespace monolct {

/// Polar data of one pixel: f = e^rho (cos theta + I sin theta).
struct LocalPolar {
  bool defined = false;
  cdouble rho{};
  cdouble theta{};
  std::array<cdouble, 2> unit{};
};

/// Per-pixel polar decomposition of a monogenic field (n = 2).
struct FeatureMaps {
  Field2D amplitude;                  // A
  Field2D phase;                      // theta
  Field2D attenuation;                // rho = ln A
  std::array<Field2D, 2> unit;        // I
  std::array<Field2D, 2> phase_vector;  // r = I theta
  std::vector<std::uint8_t> defined;  // 0 where the decomposition is undefined

  std::size_t rows() const { return amplitude.rows; }
  std::size_t cols() const { return amplitude.cols; }
  LocalPolar at(std::size_t i, std::size_t j) const;
  std::size_t defined_count() const;
};

/// Masks pixels whose amplitude or vector pseudo-norm is below eps * max|A|.
FeatureMaps compute_features(const MonogenicField& field, double eps = 1e-12);

/// Moves `other` onto the representative of its polar data closest to `ref`.
/// (A, theta, I), (-A, theta + pi, I) and (A, -theta, -I) describe the same
/// paravector, and rho is defined modulo 2 pi i. Returns false when the
/// aligned pair is still more than pi/2 apart in arg or phase.
bool align_polar(const LocalPolar& ref, LocalPolar& other);

struct DerivativeOptions {
  double delta_ratio = 0.01;  // x0-step for central differences, relative to x0
  double eps = 1e-12;
  Boundary boundary = Boundary::Periodic;
};

/// Local derivative terms of the polar form at scale x0. Spatial derivatives
/// are central differences with replicated borders; x0-derivatives are central
/// differences of the decomposition at x0 +- delta. Neighbours are aligned to
/// the centre pixel first; `valid` is 0 where the centre is undefined or an
/// alignment fails.
struct FeatureDerivatives {
  double a = 0.0;
  double b = 1.0;
  double x0 = 0.0;
  FeatureMaps center;
  std::array<Field2D, 2> grad_rho;   // D rho
  Field2D drho_dx0;
  std::array<Field2D, 2> dr_dx0;     // d r / dx0
  std::array<Field2D, 2> dunit_dx0;  // d I / dx0
  std::array<Field2D, 2> vec_dunit_unit;  // Vec[(D I) I]
  Field2D sc_dexp_exp;               // Sc[(D e^r) e^{-r}]
  std::vector<std::uint8_t> valid;
};

FeatureDerivatives feature_derivatives(const Field2D& f, const LctParams& p, double x0,
                                       const DerivativeOptions& opts = {});

/// Residuals of the Cauchy-Riemann-type system satisfied by e^rho e^r:
///   r1 = i(a/b) x0 + d rho/dx0 + Sc[(D e^r) e^{-r}]
///   r2 = i(a/b) x + d r/dx0 + D rho - Vec[(D I) I] sin^2 theta + (sin theta cos theta - theta) dI/dx0
struct CrResiduals {
  Field2D r1;
  std::array<Field2D, 2> r2;
  std::array<Field2D, 2> grad_rho;
  std::vector<std::uint8_t> valid;  // interior pixels with valid derivatives
};

CrResiduals cr_residuals(const Field2D& f, const LctParams& p, double x0, const DerivativeOptions& opts = {});

/// The phase-congruency vector
///   [i(a/b) x] + d r/dx0 - Vec[(D I) I] sin^2 theta + (sin theta cos theta - theta) dI/dx0
/// at one pixel; equals -D rho wherever the system above holds.
std::array<cdouble, 2> mdcpc_vector(const FeatureDerivatives& d, std::size_t i, std::size_t j,
                                    bool include_linear_term);

}  // namespace monolct
