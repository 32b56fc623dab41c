// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The monolct Authors

#include "monolct/edge.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "monolct/clifford.hpp"
#include "monolct/features.hpp"

namespace monolct {

namespace {

void require_x0(double x0) {
  if (!(x0 > 0.0)) throw std::invalid_argument("edge maps need x0 > 0");
}

DerivativeOptions derivative_options(const EdgeOptions& o) {
  DerivativeOptions d;
  d.delta_ratio = o.delta_ratio;
  d.eps = o.eps;
  d.boundary = o.boundary;
  return d;
}

EdgeMap finish(RealImage raw, EdgeMethod method, const LctParams& p, double x0, const EdgeOptions& opts) {
  EdgeMap m;
  m.method = method;
  m.a = p.a();
  m.b = p.b();
  m.x0 = x0;
  m.threshold = opts.threshold;
  m.percentile = opts.percentile;
  m.strength = percentile_normalize(raw, opts.percentile, &m.scale);
  m.raw = std::move(raw);
  return m;
}

}  // namespace

CliffordField CliffordField::zeros(int n, const Field2D& grid) {
  CliffordField f;
  f.n = n;
  f.blades.assign(std::size_t{1} << n, Field2D(grid.rows, grid.cols, grid.dx, grid.dy));
  return f;
}

CliffordField dirac_apply(const CliffordField& f) {
  if (f.blades.size() != (std::size_t{1} << f.n)) throw GridMismatch("Clifford field needs 2^n blades");
  const Field2D& g = f.blades.front();
  for (const auto& b : f.blades) {
    if (!b.same_grid(g)) throw GridMismatch("Clifford field blades must share one grid");
  }
  const int n = f.n;
  const std::size_t h = g.rows;
  const std::size_t w = g.cols;
  CliffordField out = CliffordField::zeros(n, g);
  const int axes = std::min(n, 2);
  for (std::size_t s = 0; s < f.blades.size(); ++s) {
    const unsigned mask = CliffordNum::blade_mask(n, s);
    for (int j = 1; j <= axes; ++j) {
      // e_j e_S = sign * e_{S xor j}
      CliffordNum blade(n);
      blade[s] = 1.0;
      const auto prod = CliffordNum::basis_vector(n, j) * blade;
      const std::size_t target = CliffordNum::index_of_mask(n, mask ^ (1u << (j - 1)));
      const cdouble sign = prod[target];
      const Field2D& src = f.blades[s];
      Field2D& dst = out.blades[target];
      for (std::size_t i = 0; i < h; ++i) {
        for (std::size_t c = 0; c < w; ++c) {
          cdouble deriv;
          if (j == 1) {
            deriv = (src.at(i, std::min(c + 1, w - 1)) - src.at(i, c == 0 ? 0 : c - 1)) / (2.0 * g.dx);
          } else {
            deriv = (src.at(std::min(i + 1, h - 1), c) - src.at(i == 0 ? 0 : i - 1, c)) / (2.0 * g.dy);
          }
          dst.at(i, c) += sign * deriv;
        }
      }
    }
  }
  return out;
}

const char* to_string(EdgeMethod m) { return m == EdgeMethod::Lca ? "lca" : "mdcpc"; }

RealImage percentile_normalize(const RealImage& raw, double percentile, double* scale) {
  if (!(percentile > 0.0 && percentile <= 100.0)) throw std::invalid_argument("percentile must be in (0, 100]");
  RealImage out(raw.rows, raw.cols);
  if (raw.data.empty()) return out;
  std::vector<double> sorted(raw.data);
  std::sort(sorted.begin(), sorted.end());
  const auto rank = static_cast<std::size_t>(std::ceil(percentile / 100.0 * static_cast<double>(sorted.size())));
  double s = sorted[std::max<std::size_t>(rank, 1) - 1];
  if (!(s > 0.0)) s = sorted.back();
  if (scale) *scale = s > 0.0 ? s : 0.0;
  if (!(s > 0.0)) return out;
  for (std::size_t k = 0; k < raw.data.size(); ++k) out.data[k] = std::clamp(raw.data[k] / s, 0.0, 1.0);
  return out;
}

RealImage lca_raw(const Field2D& f, const LctParams& p, double x0, const EdgeOptions& opts) {
  require_x0(x0);
  const auto d = feature_derivatives(f, p, x0, derivative_options(opts));
  RealImage raw(f.rows, f.cols);
  for (std::size_t k = 0; k < raw.data.size(); ++k) {
    if (!d.valid[k]) continue;
    raw.data[k] = std::sqrt(std::norm(d.grad_rho[0].data[k]) + std::norm(d.grad_rho[1].data[k]));
  }
  return raw;
}

RealImage mdcpc_raw(const Field2D& f, const LctParams& p, double x0, bool include_linear_term,
                    const EdgeOptions& opts) {
  require_x0(x0);
  const auto d = feature_derivatives(f, p, x0, derivative_options(opts));
  RealImage raw(f.rows, f.cols);
  for (std::size_t i = 0; i < f.rows; ++i) {
    for (std::size_t j = 0; j < f.cols; ++j) {
      if (!d.valid[i * f.cols + j]) continue;
      const auto v = mdcpc_vector(d, i, j, include_linear_term);
      raw.at(i, j) = std::sqrt(std::norm(v[0]) + std::norm(v[1]));
    }
  }
  return raw;
}

EdgeMap lca_map(const Field2D& f, const LctParams& p, double x0, const EdgeOptions& opts) {
  return finish(lca_raw(f, p, x0, opts), EdgeMethod::Lca, p, x0, opts);
}

EdgeMap mdcpc_map(const Field2D& f, const LctParams& p, double x0, bool include_linear_term,
                  const EdgeOptions& opts) {
  auto m = finish(mdcpc_raw(f, p, x0, include_linear_term, opts), EdgeMethod::Mdcpc, p, x0, opts);
  m.include_linear_term = include_linear_term;
  return m;
}

SynthKind parse_synth_kind(const std::string& s) {
  if (s == "step") return SynthKind::Step;
  if (s == "disk") return SynthKind::Disk;
  if (s == "bars") return SynthKind::Bars;
  if (s == "ramp") return SynthKind::Ramp;
  throw std::invalid_argument("unsupported synthetic image kind: " + s);
}

const char* to_string(SynthKind k) {
  switch (k) {
    case SynthKind::Step: return "step";
    case SynthKind::Disk: return "disk";
    case SynthKind::Bars: return "bars";
    case SynthKind::Ramp: return "ramp";
  }
  return "?";
}

std::size_t GroundTruth::count() const {
  return static_cast<std::size_t>(std::count(edge.begin(), edge.end(), std::uint8_t{1}));
}

SynthImage synth_image(const SynthSpec& spec) {
  const std::size_t n = spec.size;
  if (n < 32) throw std::invalid_argument("synthetic images need size >= 32");
  RealImage levels(n, n);
  GroundTruth truth{n, n, std::vector<std::uint8_t>(n * n, 0), {}};
  const std::size_t mid = n / 2;
  char desc[160];

  switch (spec.kind) {
    case SynthKind::Step:
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) levels.at(i, j) = j < mid ? spec.low : spec.high;
        truth.edge[i * n + mid] = 1;
      }
      std::snprintf(desc, sizeof desc, "step size=%zu low=%g high=%g column=%zu", n, spec.low, spec.high, mid);
      break;
    case SynthKind::Disk: {
      const double r = spec.radius > 0.0 ? spec.radius : static_cast<double>(n) / 4.0;
      auto inside = [&](long i, long j) {
        const double di = static_cast<double>(i) - static_cast<double>(mid);
        const double dj = static_cast<double>(j) - static_cast<double>(mid);
        return di * di + dj * dj <= r * r;
      };
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          const long li = static_cast<long>(i);
          const long lj = static_cast<long>(j);
          const bool in = inside(li, lj);
          levels.at(i, j) = in ? spec.high : spec.low;
          if (in && (!inside(li + 1, lj) || !inside(li - 1, lj) || !inside(li, lj + 1) || !inside(li, lj - 1))) {
            truth.edge[i * n + j] = 1;
          }
        }
      }
      std::snprintf(desc, sizeof desc, "disk size=%zu radius=%g low=%g high=%g", n, r, spec.low, spec.high);
      break;
    }
    case SynthKind::Bars: {
      const std::size_t p = spec.period;
      if (p < 2) throw std::invalid_argument("bar period must be >= 2");
      // Shifted by half a bar so the pattern tiles seamlessly when n is a multiple of 2p.
      auto bar = [&](std::size_t j) { return ((j + p / 2) / p) % 2; };
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          levels.at(i, j) = bar(j) == 0 ? spec.low : spec.high;
          if (j > 0 && bar(j) != bar(j - 1)) truth.edge[i * n + j] = 1;
        }
      }
      std::snprintf(desc, sizeof desc, "bars size=%zu period=%zu low=%g high=%g", n, p, spec.low, spec.high);
      break;
    }
    case SynthKind::Ramp: {
      const double w = static_cast<double>(std::max<std::size_t>(spec.ramp_width, 1));
      const double start = static_cast<double>(mid) - w / 2.0;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          const double t = std::clamp((static_cast<double>(j) - start) / w, 0.0, 1.0);
          levels.at(i, j) = spec.low + (spec.high - spec.low) * t;
        }
        truth.edge[i * n + mid] = 1;
      }
      std::snprintf(desc, sizeof desc, "ramp size=%zu width=%zu low=%g high=%g column=%zu", n, spec.ramp_width,
                    spec.low, spec.high, mid);
      break;
    }
  }
  truth.description = desc;

  if (spec.noise_sigma > 0.0) {
    std::mt19937_64 rng(spec.seed);
    std::normal_distribution<double> noise(0.0, spec.noise_sigma);
    for (auto& v : levels.data) v += noise(rng);
    truth.description += " noise=" + std::to_string(spec.noise_sigma) + " seed=" + std::to_string(spec.seed);
  }
  for (auto& v : levels.data) v /= 255.0;
  return {to_field(levels), std::move(truth)};
}

std::vector<std::uint8_t> detect(const RealImage& strength, double threshold) {
  std::vector<std::uint8_t> out(strength.data.size(), 0);
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = strength.data[k] >= threshold ? 1 : 0;
  return out;
}

std::vector<double> distances_to_truth(const std::vector<std::uint8_t>& detected, const GroundTruth& truth) {
  if (detected.size() != truth.edge.size()) throw GridMismatch("detection and truth sizes differ");
  std::vector<std::pair<double, double>> pts;
  for (std::size_t k = 0; k < truth.edge.size(); ++k) {
    if (truth.edge[k]) pts.emplace_back(static_cast<double>(k / truth.cols), static_cast<double>(k % truth.cols));
  }
  std::vector<double> out;
  for (std::size_t k = 0; k < detected.size(); ++k) {
    if (!detected[k]) continue;
    const double i = static_cast<double>(k / truth.cols);
    const double j = static_cast<double>(k % truth.cols);
    double best = std::numeric_limits<double>::infinity();
    for (const auto& [ti, tj] : pts) best = std::min(best, (i - ti) * (i - ti) + (j - tj) * (j - tj));
    out.push_back(std::sqrt(best));
  }
  return out;
}

double pratt_fom(const std::vector<std::uint8_t>& detected, const GroundTruth& truth) {
  const auto d = distances_to_truth(detected, truth);
  if (d.empty()) return 0.0;
  const double denom = static_cast<double>(std::max(d.size(), truth.count()));
  double acc = 0.0;
  for (double di : d) acc += 1.0 / (1.0 + di * di / 9.0);
  return acc / denom;
}

double pratt_fom(const EdgeMap& candidate, const GroundTruth& truth, double threshold) {
  if (!(threshold > 0.0 && threshold < 1.0)) throw std::invalid_argument("threshold must be in (0, 1)");
  return pratt_fom(detect(candidate.strength, threshold), truth);
}

std::size_t argmax_column(const RealImage& strength) {
  std::size_t best = 0;
  double best_v = -1.0;
  for (std::size_t j = 0; j < strength.cols; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < strength.rows; ++i) s += strength.at(i, j);
    if (s > best_v) {
      best_v = s;
      best = j;
    }
  }
  return best;
}

std::size_t argmax_column(const EdgeMap& m) { return argmax_column(m.raw.data.empty() ? m.strength : m.raw); }

double mean_boundary_distance(const EdgeMap& m, const GroundTruth& truth, double threshold) {
  const auto d = distances_to_truth(detect(m.strength, threshold), truth);
  if (d.empty()) return std::numeric_limits<double>::infinity();
  double acc = 0.0;
  for (double v : d) acc += v;
  return acc / static_cast<double>(d.size());
}

}  // namespace monolct
