// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The monolct Authors

#include "monolct/lct.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "monolct/clifford.hpp"
#include "monolct/fft.hpp"

namespace monolct {

namespace {

constexpr double kPi = std::numbers::pi;
const cdouble kI(0.0, 1.0);

// e^{2 pi i s (m j mod n)/n} with exact integer reduction of the phase.
cdouble twiddle(std::size_t m, std::size_t j, std::size_t n, double s) {
  const std::size_t r = (m % n) * (j % n) % n;
  return std::polar(1.0, s * 2.0 * kPi * static_cast<double>(r) / static_cast<double>(n));
}

}  // namespace

double lct_frequency_step(const LctParams& p, std::size_t n, double dx) {
  p.require_positive_b();
  return 2.0 * kPi * p.b() / (static_cast<double>(n) * dx);
}

double chirp_phase_step(const LctParams& p, double x_max, double dx) {
  if (p.b() == 0.0) return 0.0;
  return std::abs(p.a()) * x_max * dx / (2.0 * p.b());
}

Lct1d::Lct1d(const LctParams& p, std::size_t n, double dx, double x_min)
    : p_(p), n_(n), dx_(dx), x_min_(x_min), dw_(dx), w_min_(x_min) {
  if (n < 2) throw GridMismatch("LCT needs at least 2 samples");
  if (!(dx > 0.0)) throw GridMismatch("LCT sample spacing must be positive");
  if (p.b() == 0.0) {
    if (!(p.d() > 0.0)) throw InvalidParams("b = 0 branch requires d > 0");
    return;
  }
  p.require_positive_b();
  const double a = p.a(), b = p.b(), d = p.d();
  const std::size_t m = n / 2;
  dw_ = lct_frequency_step(p, n, dx);
  w_min_ = -static_cast<double>(m) * dw_;

  const double x_max = std::max(std::abs(x_min), std::abs(x_min + static_cast<double>(n - 1) * dx));
  const double step = chirp_phase_step(p, x_max, dx);
  if (step > kPi / 4.0) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "pre-chirp phase step %.4g rad exceeds pi/4; the chirp is undersampled", step);
    warning_ = buf;
  }

  const cdouble norm_fwd = dx / complex_sqrt(kI * 2.0 * kPi * b);
  const cdouble norm_inv = dw_ / complex_sqrt(-kI * 2.0 * kPi * b);
  pre_.resize(n);
  post_.resize(n);
  ipre_.resize(n);
  ipost_.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double x = x_min + static_cast<double>(j) * dx;
    const double chirp = a * x * x / (2.0 * b);
    pre_[j] = std::polar(1.0, chirp) * twiddle(m, j, n, 1.0);
    ipost_[j] = norm_inv * std::polar(1.0, -chirp) * twiddle(m, j, n, -1.0);
  }
  for (std::size_t k = 0; k < n; ++k) {
    const double w = w_min_ + static_cast<double>(k) * dw_;
    const double chirp = d * w * w / (2.0 * b);
    const double shift = w * x_min / b;
    post_[k] = norm_fwd * std::polar(1.0, chirp - shift);
    ipre_[k] = std::polar(1.0, shift - chirp);
  }
}

std::vector<cdouble> Lct1d::resample_b0(std::span<const cdouble> f, double scale, double c_chirp) const {
  // out(w) = sqrt(scale) e^{i c_chirp w^2 / 2} f(scale w), linear interpolation
  // between nodes, zero outside the sampled interval.
  std::vector<cdouble> out(n_);
  const double amp = std::sqrt(scale);
  for (std::size_t k = 0; k < n_; ++k) {
    const double w = x_min_ + static_cast<double>(k) * dx_;
    const double pos = (scale * w - x_min_) / dx_;
    cdouble v{};
    const double fl = std::floor(pos);
    const double t = pos - fl;
    if (pos >= 0.0 && pos <= static_cast<double>(n_ - 1)) {
      const auto i0 = static_cast<std::size_t>(fl);
      v = f[i0];
      if (t > 0.0 && i0 + 1 < n_) v = (1.0 - t) * f[i0] + t * f[i0 + 1];
    }
    out[k] = amp * std::polar(1.0, c_chirp * w * w / 2.0) * v;
  }
  return out;
}

std::vector<cdouble> Lct1d::forward(std::span<const cdouble> f) const {
  if (f.size() != n_) throw GridMismatch("LCT input length does not match the plan");
  if (p_.b() == 0.0) return resample_b0(f, p_.d(), p_.c() * p_.d());
  std::vector<cdouble> buf(n_);
  for (std::size_t j = 0; j < n_; ++j) buf[j] = pre_[j] * f[j];
  fft::forward(buf);
  for (std::size_t k = 0; k < n_; ++k) buf[k] *= post_[k];
  return buf;
}

std::vector<cdouble> Lct1d::inverse(std::span<const cdouble> F) const {
  if (F.size() != n_) throw GridMismatch("LCT input length does not match the plan");
  // Inverse params (d, -b, -c, a); for b = 0 that is sqrt(a) e^{-i c a w^2/2} F(a w).
  if (p_.b() == 0.0) return resample_b0(F, p_.a(), -p_.c() * p_.a());
  std::vector<cdouble> buf(n_);
  for (std::size_t k = 0; k < n_; ++k) buf[k] = ipre_[k] * F[k];
  fft::inverse(buf);
  for (std::size_t j = 0; j < n_; ++j) buf[j] *= ipost_[j];
  return buf;
}

SampledSignal1D lct_forward_1d(const SampledSignal1D& f, const LctParams& p) {
  const Lct1d plan(p, f.size(), f.dx, f.x_min);
  return SampledSignal1D(plan.forward(f.samples), plan.w_min(), plan.dw());
}

SampledSignal1D lct_inverse_1d(const SampledSignal1D& F, const LctParams& p, std::optional<double> x_min) {
  const std::size_t n = F.size();
  if (p.b() == 0.0) {
    const Lct1d plan(p, n, F.dx, F.x_min);
    return SampledSignal1D(plan.inverse(F.samples), F.x_min, F.dx);
  }
  p.require_positive_b();
  const double centered = -static_cast<double>(n / 2) * F.dx;
  if (std::abs(F.x_min - centered) > 1e-9 * std::max(1.0, std::abs(centered))) {
    throw GridMismatch("inverse LCT expects the centered frequency grid of the forward transform");
  }
  const double dx = 2.0 * kPi * p.b() / (static_cast<double>(n) * F.dx);
  const double x0 = x_min.value_or(-static_cast<double>(n / 2) * dx);
  const Lct1d plan(p, n, dx, x0);
  return SampledSignal1D(plan.inverse(F.samples), x0, dx);
}

Field2D lct_2d(const Field2D& f, const LctParams& p, Direction dir) {
  p.require_positive_b();
  const std::size_t h = f.rows;
  const std::size_t w = f.cols;
  double sx = f.dx;
  double sy = f.dy;
  if (dir == Direction::Inverse) {
    sx = 2.0 * kPi * p.b() / (static_cast<double>(w) * f.dx);
    sy = 2.0 * kPi * p.b() / (static_cast<double>(h) * f.dy);
  }
  const Lct1d along_x(p, w, sx, -static_cast<double>(w / 2) * sx);
  const Lct1d along_y(p, h, sy, -static_cast<double>(h / 2) * sy);

  Field2D out(h, w, dir == Direction::Forward ? along_x.dw() : sx, dir == Direction::Forward ? along_y.dw() : sy);
  // Row pass then column pass; each 1D plan carries its own 1/sqrt(i 2 pi b).
  std::vector<cdouble> tmp(f.data);
  fft::parallel_for(h, [&](std::size_t i) {
    std::span<cdouble> row(tmp.data() + i * w, w);
    auto res = dir == Direction::Forward ? along_x.forward(row) : along_x.inverse(row);
    std::copy(res.begin(), res.end(), row.begin());
  });
  fft::parallel_for(w, [&](std::size_t j) {
    std::vector<cdouble> col(h);
    for (std::size_t i = 0; i < h; ++i) col[i] = tmp[i * w + j];
    auto res = dir == Direction::Forward ? along_y.forward(col) : along_y.inverse(col);
    for (std::size_t i = 0; i < h; ++i) out.data[i * w + j] = res[i];
  });
  return out;
}

std::vector<cdouble> lct_quadrature_oracle(const SampledSignal1D& f, const LctParams& p,
                                           std::span<const double> omegas) {
  p.require_positive_b();
  const double a = p.a(), b = p.b(), d = p.d();
  const cdouble norm = 1.0 / complex_sqrt(kI * 2.0 * kPi * b);
  const std::size_t n = f.size();
  std::vector<cdouble> out(omegas.size());
  for (std::size_t k = 0; k < omegas.size(); ++k) {
    const double w = omegas[k];
    cdouble acc{};
    for (std::size_t j = 0; j < n; ++j) {
      const double x = f.coord(j);
      const double weight = (j == 0 || j + 1 == n) ? 0.5 : 1.0;
      const double phase = d * w * w / (2.0 * b) - w * x / b + a * x * x / (2.0 * b);
      acc += weight * std::polar(1.0, phase) * f.samples[j];
    }
    out[k] = norm * acc * f.dx;
  }
  return out;
}

}  // namespace monolct
