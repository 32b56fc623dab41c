// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The monolct Authors

#pragma once

#include <memory>
#include <string>
#include <vector>

#include "monolct/clifford.hpp"
#include "monolct/grid.hpp"

namespace monolct {

/// How FFT paths treat the image border.
///   Periodic: the field is taken as one period.
///   Reflect:  the field is mirror-padded by half its size on every side
///             before filtering and cropped afterwards.
///   Zero:     the field is taken as zero outside the grid (embedded in a
///             4x larger zero field, then cropped).
enum class Boundary { Periodic, Reflect, Zero };

const char* to_string(Boundary b);
/// "periodic", "reflect" or "zero"; throws std::invalid_argument otherwise.
Boundary parse_boundary(const std::string& s);

/// Paravector-valued field f0 + f1 e1 + ... + fn en at scale x0 >= 0.
struct MonogenicField {
  int n = 2;
  Field2D f0;
  std::vector<Field2D> fj;  // fj[j-1] is the e_j channel
  double a = 0.0;
  double b = 1.0;
  double x0 = 0.0;
  Boundary boundary = Boundary::Periodic;
  std::shared_ptr<const Field2D> source;  // generating image, needed by ddx0

  std::size_t rows() const { return f0.rows; }
  std::size_t cols() const { return f0.cols; }
  Paravector at(std::size_t i, std::size_t j) const;
};

/// j-th generalized Riesz transform (j = 1 along columns, 2 along rows):
///   e^{-ia|x|^2/2b} F^{-1}[(-i u_j/|u|) F[e^{ia|t|^2/2b} f]],
/// with multiplier 0 at DC and on the Nyquist line of axis j.
Field2D riesz_spectral(const Field2D& f, double a, double b, int j);

/// Direct principal-value sum of the Riesz kernel (x_j - t_j)/(2 pi |x - t|^3)
/// over all other cells; the singular cell contributes through a local linear
/// model of the chirped input (central-difference gradient). Grids above 64x64
/// are rejected.
Field2D riesz_spatial_oracle(const Field2D& f, double a, double b, int j);

/// f - sum_j R_j f e_j.
MonogenicField monogenic_signal(const Field2D& f, double a, double b, Boundary boundary = Boundary::Periodic);

/// Extension to x0 > 0: the chirped spectrum is weighted by
/// e^{-x0 |u|} (1 + i u/|u|), inverted, and de-chirped with e^{-ia(x0^2 + |x|^2)/2b}.
/// Only a and b enter.
MonogenicField monogenic_extend(const Field2D& f, const LctParams& p, double x0,
                                Boundary boundary = Boundary::Periodic);
MonogenicField monogenic_extend(const Field2D& f, double a, double b, double x0,
                                Boundary boundary = Boundary::Periodic);

/// Poisson / conjugate-Poisson quadrature of the same extension, non-periodic.
/// Grids above 64x64 are rejected.
MonogenicField monogenic_extend_quadrature(const Field2D& f, double a, double b, double x0);

/// Exact x0-derivative of an extension (including the x0 dependence of the de-chirp).
MonogenicField ddx0(const MonogenicField& field);

/// Relative Dirac residual ||D h|| / ||grad h|| over interior pixels (RMS ratio),
/// with h = e^{ia|x0 + x|^2/2b} f_M when `chirp_compensated`, else h = f_M.
/// x0-derivatives come from ddx0, spatial ones from central differences.
double monogenicity_residual(const MonogenicField& field, bool chirp_compensated = true);

/// Raised-cosine taper over the outer `fraction` of rows and columns.
Field2D window_raised_cosine(const Field2D& f, double fraction = 0.1);

}  // namespace monolct
