// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The monolct Authors

#include "monolct/grid.hpp"

#include <cmath>

namespace monolct {

LctParams::LctParams(double a, double b, double c, double d) : a_(a), b_(b), c_(c), d_(d) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c) || !std::isfinite(d)) {
    throw InvalidParams("LCT parameters must be finite");
  }
  if (std::abs(a * d - b * c - 1.0) >= kUnimodularTol) {
    throw InvalidParams("LCT parameters must satisfy ad - bc = 1");
  }
  if (b < 0.0) throw InvalidParams("LCT parameter b must be >= 0");
}

LctParams LctParams::complete(double a, double b, double d) {
  if (!(b > 0.0)) throw InvalidParams("LCT parameter b must be > 0");
  return {a, b, (a * d - 1.0) / b, d};
}

void LctParams::require_positive_b() const {
  if (!(b_ > 0.0)) throw InvalidParams("this transform requires b > 0");
}

SampledSignal1D::SampledSignal1D(std::vector<cdouble> s, double x_min_, double dx_)
    : samples(std::move(s)), x_min(x_min_), dx(dx_) {
  if (samples.size() < 2) throw GridMismatch("signal needs at least 2 samples");
  if (!(dx > 0.0)) throw GridMismatch("sample spacing must be positive");
}

SampledSignal1D SampledSignal1D::centered(std::size_t n, double dx) {
  const double x_min = -static_cast<double>(n / 2) * dx;
  return SampledSignal1D(std::vector<cdouble>(n), x_min, dx);
}

double SampledSignal1D::energy() const {
  double e = 0.0;
  for (const auto& s : samples) e += std::norm(s);
  return e * dx;
}

Field2D::Field2D(std::size_t rows_, std::size_t cols_, double dx_, double dy_)
    : rows(rows_), cols(cols_), dx(dx_), dy(dy_), data(rows_ * cols_) {
  if (rows < 2 || cols < 2) throw GridMismatch("field needs at least 2x2 samples");
  if (!(dx > 0.0) || !(dy > 0.0)) throw GridMismatch("field spacing must be positive");
}

bool Field2D::same_grid(const Field2D& o) const {
  return rows == o.rows && cols == o.cols && dx == o.dx && dy == o.dy;
}

double Field2D::energy() const {
  double e = 0.0;
  for (const auto& s : data) e += std::norm(s);
  return e * dx * dy;
}

RealImage real_part(const Field2D& f) {
  RealImage out(f.rows, f.cols);
  for (std::size_t k = 0; k < f.size(); ++k) out.data[k] = f.data[k].real();
  return out;
}

Field2D to_field(const RealImage& img, double dx, double dy) {
  Field2D f(img.rows, img.cols, dx, dy);
  for (std::size_t k = 0; k < img.data.size(); ++k) f.data[k] = img.data[k];
  return f;
}

double relative_l2(const std::vector<cdouble>& x, const std::vector<cdouble>& y) {
  if (x.size() != y.size()) throw GridMismatch("relative_l2: size mismatch");
  double num = 0.0;
  double den = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    num += std::norm(x[k] - y[k]);
    den += std::norm(y[k]);
  }
  if (den == 0.0) return num == 0.0 ? 0.0 : INFINITY;
  return std::sqrt(num / den);
}

}  // namespace monolct
