// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The monolct Authors

#include "monolct/features.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "monolct/clifford.hpp"
#include "monolct/fft.hpp"

namespace monolct {

namespace {

constexpr double kPi = std::numbers::pi;
const cdouble kI(0.0, 1.0);

Field2D like(const Field2D& f) { return Field2D(f.rows, f.cols, f.dx, f.dy); }

CliffordNum vec2(cdouble v1, cdouble v2) { return CliffordNum(2, {0.0, v1, v2, 0.0}); }

// e^{s r} = cos theta + s I sin theta
CliffordNum exp_r(const LocalPolar& p, double s) {
  const cdouble c = std::cos(p.theta);
  const cdouble sn = s * std::sin(p.theta);
  return CliffordNum(2, {c, sn * p.unit[0], sn * p.unit[1], 0.0});
}

}  // namespace

LocalPolar FeatureMaps::at(std::size_t i, std::size_t j) const {
  LocalPolar p;
  const std::size_t k = i * cols() + j;
  p.defined = defined[k] != 0;
  p.rho = attenuation.data[k];
  p.theta = phase.data[k];
  p.unit = {unit[0].data[k], unit[1].data[k]};
  return p;
}

std::size_t FeatureMaps::defined_count() const {
  return static_cast<std::size_t>(std::count(defined.begin(), defined.end(), std::uint8_t{1}));
}

FeatureMaps compute_features(const MonogenicField& field, double eps) {
  if (field.n != 2) throw std::invalid_argument("compute_features supports n = 2");
  const Field2D& g = field.f0;
  FeatureMaps out{like(g), like(g), like(g), {like(g), like(g)}, {like(g), like(g)},
                  std::vector<std::uint8_t>(g.size(), 0)};
  double max_amp = 0.0;
  for (std::size_t k = 0; k < g.size(); ++k) {
    const cdouble y0 = field.f0.data[k];
    const cdouble y1 = field.fj[0].data[k];
    const cdouble y2 = field.fj[1].data[k];
    max_amp = std::max(max_amp, std::abs(complex_sqrt(y0 * y0 + y1 * y1 + y2 * y2)));
  }
  if (max_amp == 0.0) return out;
  const double threshold = eps * max_amp;
  fft::parallel_for(g.rows, [&](std::size_t i) {
    for (std::size_t j = 0; j < g.cols; ++j) {
      const std::size_t k = i * g.cols + j;
      const auto polar = polar_decompose(field.at(i, j), threshold);
      if (!polar.defined) continue;
      out.defined[k] = 1;
      out.amplitude.data[k] = polar.amplitude;
      out.phase.data[k] = polar.phase;
      out.attenuation.data[k] = complex_ln(polar.amplitude);
      for (std::size_t c = 0; c < 2; ++c) {
        out.unit[c].data[k] = polar.unit[c];
        out.phase_vector[c].data[k] = polar.unit[c] * polar.phase;
      }
    }
  });
  return out;
}

bool align_polar(const LocalPolar& ref, LocalPolar& other) {
  double same = 0.0;
  double flipped = 0.0;
  for (std::size_t c = 0; c < 2; ++c) {
    same += std::norm(other.unit[c] - ref.unit[c]);
    flipped += std::norm(other.unit[c] + ref.unit[c]);
  }
  if (flipped < same) {
    other.unit = {-other.unit[0], -other.unit[1]};
    other.theta = -other.theta;
  }
  const double turns = std::round((ref.theta.real() - other.theta.real()) / kPi);
  other.theta += turns * kPi;
  other.rho += kI * (turns * kPi);
  const double wraps = std::round((ref.rho.imag() - other.rho.imag()) / (2.0 * kPi));
  other.rho += kI * (wraps * 2.0 * kPi);
  return std::abs(other.theta.real() - ref.theta.real()) <= kPi / 2.0 &&
         std::abs(other.rho.imag() - ref.rho.imag()) <= kPi / 2.0;
}

FeatureDerivatives feature_derivatives(const Field2D& f, const LctParams& p, double x0,
                                       const DerivativeOptions& opts) {
  if (!(x0 > 0.0)) throw std::invalid_argument("feature derivatives need x0 > 0");
  p.require_positive_b();
  const double delta = opts.delta_ratio * x0;
  if (!(delta > 0.0) || !(delta < x0)) throw std::invalid_argument("delta_ratio must be in (0, 1)");

  const auto mid = monogenic_extend(f, p, x0, opts.boundary);
  const auto up = compute_features(monogenic_extend(f, p, x0 + delta, opts.boundary), opts.eps);
  const auto down = compute_features(monogenic_extend(f, p, x0 - delta, opts.boundary), opts.eps);

  FeatureDerivatives d;
  d.a = p.a();
  d.b = p.b();
  d.x0 = x0;
  d.center = compute_features(mid, opts.eps);
  const Field2D& g = d.center.amplitude;
  d.grad_rho = {like(g), like(g)};
  d.drho_dx0 = like(g);
  d.dr_dx0 = {like(g), like(g)};
  d.dunit_dx0 = {like(g), like(g)};
  d.vec_dunit_unit = {like(g), like(g)};
  d.sc_dexp_exp = like(g);
  d.valid.assign(g.size(), 0);

  const std::size_t h = g.rows;
  const std::size_t w = g.cols;
  const auto e1 = CliffordNum::basis_vector(2, 1);
  const auto e2 = CliffordNum::basis_vector(2, 2);

  fft::parallel_for(h, [&](std::size_t i) {
    for (std::size_t j = 0; j < w; ++j) {
      const std::size_t k = i * w + j;
      const LocalPolar c = d.center.at(i, j);
      if (!c.defined) continue;

      // Neighbours in order +x1, -x1, +x2, -x2 (replicated at the border),
      // then x0 + delta, x0 - delta.
      const std::array<LocalPolar, 6> raw = {
          d.center.at(i, std::min(j + 1, w - 1)), d.center.at(i, j == 0 ? 0 : j - 1),
          d.center.at(std::min(i + 1, h - 1), j), d.center.at(i == 0 ? 0 : i - 1, j),
          up.at(i, j),                            down.at(i, j)};
      std::array<LocalPolar, 6> nb = raw;
      bool ok = true;
      for (auto& q : nb) ok = ok && q.defined && align_polar(c, q);
      if (!ok) continue;

      const double hx = 2.0 * g.dx;
      const double hy = 2.0 * g.dy;
      const double hz = 2.0 * delta;

      d.grad_rho[0].data[k] = (nb[0].rho - nb[1].rho) / hx;
      d.grad_rho[1].data[k] = (nb[2].rho - nb[3].rho) / hy;
      d.drho_dx0.data[k] = (nb[4].rho - nb[5].rho) / hz;
      for (std::size_t cpt = 0; cpt < 2; ++cpt) {
        d.dr_dx0[cpt].data[k] = (nb[4].unit[cpt] * nb[4].theta - nb[5].unit[cpt] * nb[5].theta) / hz;
        d.dunit_dx0[cpt].data[k] = (nb[4].unit[cpt] - nb[5].unit[cpt]) / hz;
      }

      const CliffordNum unit_c = vec2(c.unit[0], c.unit[1]);
      const CliffordNum d1_unit = vec2(nb[0].unit[0] - nb[1].unit[0], nb[0].unit[1] - nb[1].unit[1]) * (1.0 / hx);
      const CliffordNum d2_unit = vec2(nb[2].unit[0] - nb[3].unit[0], nb[2].unit[1] - nb[3].unit[1]) * (1.0 / hy);
      const CliffordNum dirac_unit = e1 * d1_unit + e2 * d2_unit;
      const auto vec = (dirac_unit * unit_c).vector_part();
      d.vec_dunit_unit[0].data[k] = vec[0];
      d.vec_dunit_unit[1].data[k] = vec[1];

      const CliffordNum d1_exp = (exp_r(nb[0], 1.0) - exp_r(nb[1], 1.0)) * (1.0 / hx);
      const CliffordNum d2_exp = (exp_r(nb[2], 1.0) - exp_r(nb[3], 1.0)) * (1.0 / hy);
      const CliffordNum dirac_exp = e1 * d1_exp + e2 * d2_exp;
      d.sc_dexp_exp.data[k] = (dirac_exp * exp_r(c, -1.0)).scalar_part();

      d.valid[k] = 1;
    }
  });
  return d;
}

std::array<cdouble, 2> mdcpc_vector(const FeatureDerivatives& d, std::size_t i, std::size_t j,
                                    bool include_linear_term) {
  const Field2D& g = d.center.amplitude;
  const std::size_t k = i * g.cols + j;
  const cdouble theta = d.center.phase.data[k];
  const cdouble s = std::sin(theta);
  const cdouble c = std::cos(theta);
  const std::array<double, 2> x = {g.x1(j), g.x2(i)};
  std::array<cdouble, 2> v{};
  for (std::size_t cpt = 0; cpt < 2; ++cpt) {
    v[cpt] = d.dr_dx0[cpt].data[k] - d.vec_dunit_unit[cpt].data[k] * s * s + (s * c - theta) * d.dunit_dx0[cpt].data[k];
    if (include_linear_term) v[cpt] += kI * (d.a / d.b) * x[cpt];
  }
  return v;
}

CrResiduals cr_residuals(const Field2D& f, const LctParams& p, double x0, const DerivativeOptions& opts) {
  const auto d = feature_derivatives(f, p, x0, opts);
  const Field2D& g = d.center.amplitude;
  CrResiduals out{like(g), {like(g), like(g)}, d.grad_rho, std::vector<std::uint8_t>(g.size(), 0)};
  const cdouble lin = kI * (d.a / d.b);
  for (std::size_t i = 1; i + 1 < g.rows; ++i) {
    for (std::size_t j = 1; j + 1 < g.cols; ++j) {
      const std::size_t k = i * g.cols + j;
      if (!d.valid[k]) continue;
      out.valid[k] = 1;
      out.r1.data[k] = lin * x0 + d.drho_dx0.data[k] + d.sc_dexp_exp.data[k];
      const auto v = mdcpc_vector(d, i, j, true);
      out.r2[0].data[k] = v[0] + d.grad_rho[0].data[k];
      out.r2[1].data[k] = v[1] + d.grad_rho[1].data[k];
    }
  }
  return out;
}

}  // namespace monolct
