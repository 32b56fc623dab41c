// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The monolct Authors

#include "monolct/analytic1d.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "monolct/clifford.hpp"
#include "monolct/fft.hpp"
#include "monolct/lct.hpp"

namespace monolct {

namespace {

constexpr double kPi = std::numbers::pi;
const cdouble kI(0.0, 1.0);

void require_b(double b) {
  if (!(b > 0.0)) throw InvalidParams("parameter b must be > 0");
}

std::vector<cdouble> chirp(const SampledSignal1D& f, double a, double b, double sign) {
  std::vector<cdouble> g(f.size());
  for (std::size_t j = 0; j < f.size(); ++j) {
    const double x = f.coord(j);
    g[j] = std::polar(1.0, sign * a * x * x / (2.0 * b)) * f.samples[j];
  }
  return g;
}

}  // namespace

HalfPlanePoint::HalfPlanePoint(double x, double y) : x_(x), y_(y) {
  if (!(y > 0.0)) throw std::invalid_argument("half-plane point needs y > 0");
}

SampledSignal1D pht(const SampledSignal1D& f, double a, double b) {
  require_b(b);
  const std::size_t n = f.size();
  auto g = chirp(f, a, b, 1.0);
  fft::forward(g);
  for (std::size_t k = 0; k < n; ++k) {
    const long s = fft::signed_bin(k, n);
    const double sgn = s > 0 ? 1.0 : (s < 0 ? -1.0 : 0.0);
    g[k] *= -kI * sgn / static_cast<double>(n);
  }
  fft::inverse(g);
  SampledSignal1D out(std::move(g), f.x_min, f.dx);
  out.samples = chirp(out, a, b, -1.0);
  return out;
}

SampledSignal1D pht_pv_oracle(const SampledSignal1D& f, double a, double b) {
  require_b(b);
  const std::size_t n = f.size();
  const auto g = chirp(f, a, b, 1.0);
  std::vector<cdouble> h(n);
  for (std::size_t i = 0; i < n; ++i) {
    cdouble acc{};
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      acc += g[j] / (static_cast<double>(i) - static_cast<double>(j));
    }
    // (x_i - t_j) = (i - j) dx, so the dx of the measure cancels.
    h[i] = acc / kPi;
  }
  SampledSignal1D out(std::move(h), f.x_min, f.dx);
  out.samples = chirp(out, a, b, -1.0);
  return out;
}

GasSignal gas(const SampledSignal1D& f, double a, double b) {
  const auto h = pht(f, a, b);
  GasSignal out{f, a, b};
  for (std::size_t j = 0; j < f.size(); ++j) out.base.samples[j] = f.samples[j] + kI * h.samples[j];
  return out;
}

GasSignal gas_spectral(const SampledSignal1D& f, const LctParams& p) {
  p.require_positive_b();
  auto F = lct_forward_1d(f, p);
  const std::size_t mid = F.size() / 2;
  for (std::size_t k = 0; k < F.size(); ++k) {
    if (k < mid) {
      F.samples[k] = 0.0;
    } else if (k > mid) {
      F.samples[k] *= 2.0;
    }
  }
  return GasSignal{lct_inverse_1d(F, p, f.x_min), p.a(), p.b()};
}

std::vector<cdouble> gas_extend(const SampledSignal1D& f, const LctParams& p, std::span<const HalfPlanePoint> pts) {
  p.require_positive_b();
  // Zero-pad 4x: the frequency sum otherwise carries periodic copies of f
  // one record length apart.
  const std::size_t n0 = f.size();
  SampledSignal1D padded(std::vector<cdouble>(4 * n0), f.x_min - static_cast<double>(3 * n0 / 2) * f.dx, f.dx);
  std::copy(f.samples.begin(), f.samples.end(), padded.samples.begin() + static_cast<long>(3 * n0 / 2));
  const auto F = lct_forward_1d(padded, p);
  const std::size_t n = F.size();
  const std::size_t mid = n / 2;

  double total = 0.0;
  double tail = 0.0;
  const auto edge = static_cast<std::size_t>(std::ceil(0.05 * static_cast<double>(n)));
  for (std::size_t k = 0; k < n; ++k) {
    const double e = std::norm(F.samples[k]);
    total += e;
    if (k < edge || k + edge >= n) tail += e;
  }
  if (total > 0.0 && tail > 1e-6 * total) {
    throw std::domain_error("gas_extend: LCT spectrum does not decay inside the frequency grid");
  }

  const double a = p.a(), b = p.b(), d = p.d();
  const cdouble norm = 1.0 / complex_sqrt(-kI * 2.0 * kPi * b);
  std::vector<cdouble> out(pts.size());
  for (std::size_t m = 0; m < pts.size(); ++m) {
    const cdouble z = pts[m].z();
    const cdouble outer = std::exp(-kI * a * z * z / (2.0 * b));
    cdouble acc{};
    for (std::size_t k = mid; k < n; ++k) {
      const double w = F.coord(k);
      const double weight = (k == mid) ? 0.5 : 1.0;
      acc += weight * std::exp(kI * z * w / b - kI * d * w * w / (2.0 * b)) * F.samples[k];
    }
    out[m] = 2.0 * norm * outer * acc * F.dx;
  }
  return out;
}

PoissonPair poisson_extend_1d(const SampledSignal1D& g, double x, double y) {
  if (!(y > 0.0)) throw std::invalid_argument("poisson_extend_1d: y must be > 0");
  const std::size_t n = g.size();
  cdouble p{}, q{};
  for (std::size_t j = 0; j < n; ++j) {
    const double u = x - g.coord(j);
    const double weight = (j == 0 || j + 1 == n) ? 0.5 : 1.0;
    const double den = kPi * (u * u + y * y);
    p += weight * (y / den) * g.samples[j];
    q += weight * (u / den) * g.samples[j];
  }
  return {p * g.dx, q * g.dx};
}

std::vector<cdouble> gas_extend_poisson(const SampledSignal1D& f, double a, double b,
                                        std::span<const HalfPlanePoint> pts) {
  require_b(b);
  SampledSignal1D g(chirp(f, a, b, 1.0), f.x_min, f.dx);
  std::vector<cdouble> out(pts.size());
  for (std::size_t m = 0; m < pts.size(); ++m) {
    const auto [pp, qq] = poisson_extend_1d(g, pts[m].x(), pts[m].y());
    const cdouble z = pts[m].z();
    out[m] = std::exp(-kI * a * z * z / (2.0 * b)) * (pp + kI * qq);
  }
  return out;
}

SampledSignal1D window_raised_cosine(const SampledSignal1D& f, double fraction) {
  SampledSignal1D out = f;
  const std::size_t n = f.size();
  const auto taper = static_cast<std::size_t>(std::round(fraction * static_cast<double>(n)));
  if (taper == 0) return out;
  for (std::size_t j = 0; j < taper; ++j) {
    const double w = 0.5 * (1.0 - std::cos(kPi * static_cast<double>(j) / static_cast<double>(taper)));
    out.samples[j] *= w;
    out.samples[n - 1 - j] *= w;
  }
  return out;
}

}  // namespace monolct
