// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The monolct Authors

#include "validate.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <random>
#include <stdexcept>

#include "monolct/analytic1d.hpp"
#include "monolct/clifford.hpp"
#include "monolct/edge.hpp"
#include "monolct/features.hpp"
#include "monolct/io.hpp"
#include "monolct/lct.hpp"
#include "monolct/monogenic.hpp"

namespace monolct::cli {

namespace {

constexpr double kPi = std::numbers::pi;
const cdouble kI(0.0, 1.0);

Check below(const std::string& suite, const std::string& name, double v, double tol) {
  return {suite, name, v, tol, std::isfinite(v) && v < tol, "<"};
}

Check above(const std::string& suite, const std::string& name, double v, double tol) {
  return {suite, name, v, tol, std::isfinite(v) && v > tol, ">"};
}

// a few Gaussian-enveloped tones, smooth enough to be band limited on the grid
SampledSignal1D random_signal(std::mt19937_64& rng, std::size_t n, double dx) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  auto s = SampledSignal1D::centered(n, dx);
  const double half = static_cast<double>(n) * dx / 2.0;
  for (int k = 0; k < 3; ++k) {
    const double c = 0.3 * half * u(rng);
    const double w = 0.05 * half * (1.5 + u(rng));
    const double nu = 2.0 * u(rng);
    const cdouble amp(u(rng), u(rng));
    for (std::size_t j = 0; j < n; ++j) {
      const double x = s.coord(j);
      s.samples[j] += amp * std::exp(-(x - c) * (x - c) / (2.0 * w * w)) * std::exp(kI * nu * x);
    }
  }
  return s;
}

Field2D gaussian_scene(std::size_t n, double dx, double sigma, double cx = 0.0, double cy = 0.0) {
  Field2D f(n, n, dx, dx);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double u = f.x1(j) - cx;
      const double v = f.x2(i) - cy;
      f.at(i, j) = std::exp(-(u * u + v * v) / (2.0 * sigma * sigma));
    }
  }
  return f;
}

double pearson(const RealImage& x, const RealImage& y) {
  const double n = static_cast<double>(x.data.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t k = 0; k < x.data.size(); ++k) {
    mx += x.data[k];
    my += y.data[k];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t k = 0; k < x.data.size(); ++k) {
    const double u = x.data[k] - mx;
    const double v = y.data[k] - my;
    sxy += u * v;
    sxx += u * u;
    syy += v * v;
  }
  return sxy / std::sqrt(sxx * syy);
}

std::vector<Check> suite_clifford(unsigned seed) {
  std::vector<Check> out;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  double square = 0.0;
  for (int n = 1; n <= 3; ++n) {
    for (int j = 1; j <= n; ++j) {
      const auto e = CliffordNum::basis_vector(n, j);
      square = std::max(square, (e * e + CliffordNum::scalar(n, 1.0)).norm());
    }
  }
  out.push_back(below("clifford", "generator_squares", square, 1e-15));

  double assoc = 0.0;
  for (int t = 0; t < 50; ++t) {
    std::vector<cdouble> ca(8), cb(8), cc(8);
    for (int k = 0; k < 8; ++k) {
      ca[k] = {u(rng), u(rng)};
      cb[k] = {u(rng), u(rng)};
      cc[k] = {u(rng), u(rng)};
    }
    const CliffordNum a(3, ca), b(3, cb), c(3, cc);
    assoc = std::max(assoc, ((a * b) * c - a * (b * c)).norm());
  }
  out.push_back(below("clifford", "associativity", assoc, 1e-12));

  double recon = 0.0;
  for (int t = 0; t < 200; ++t) {
    const Paravector p({u(rng), u(rng)}, {cdouble(u(rng), u(rng)), cdouble(u(rng), u(rng))});
    const auto polar = polar_decompose(p);
    if (!polar.defined) continue;
    const auto back = polar.reconstruct();
    double err = std::abs(back.scalar() - p.scalar());
    for (int j = 0; j < p.dim(); ++j) err = std::max(err, std::abs(back.vec(j) - p.vec(j)));
    recon = std::max(recon, err);
  }
  out.push_back(below("clifford", "polar_reconstruction", recon, 1e-10));
  return out;
}

std::vector<Check> suite_lct(unsigned seed) {
  std::vector<Check> out;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ua(-2.0, 2.0), ub(0.5, 3.0);
  double parseval = 0.0, round_trip = 0.0;
  for (int t = 0; t < 5; ++t) {
    const auto p = LctParams::complete(ua(rng), ub(rng), 1.0);
    for (int s = 0; s < 10; ++s) {
      const auto f = random_signal(rng, 256, 0.1);
      const auto F = lct_forward_1d(f, p);
      parseval = std::max(parseval, std::abs(F.energy() - f.energy()) / f.energy());
      const auto back = lct_inverse_1d(F, p);
      round_trip = std::max(round_trip, relative_l2(back.samples, f.samples));
    }
  }
  out.push_back(below("lct", "parseval_1d", parseval, 1e-8));
  out.push_back(below("lct", "round_trip_1d", round_trip, 1e-7));

  auto g = SampledSignal1D::centered(512, 0.05);
  for (std::size_t j = 0; j < g.size(); ++j) g.samples[j] = std::exp(-g.coord(j) * g.coord(j) / 2.0);
  double oracle = 0.0;
  for (const auto& p : {LctParams(1.0, 2.0, 0.0, 1.0), LctParams::fourier(), LctParams::complete(-0.5, 1.5)}) {
    const auto F = lct_forward_1d(g, p);
    std::vector<double> w(F.size());
    for (std::size_t k = 0; k < w.size(); ++k) w[k] = F.coord(k);
    oracle = std::max(oracle, relative_l2(F.samples, lct_quadrature_oracle(g, p, w)));
  }
  out.push_back(below("lct", "quadrature_oracle_gaussian", oracle, 1e-4));

  const auto scene = gaussian_scene(64, 0.1, 0.4, 0.3, -0.2);
  const LctParams p2(1.0, 2.0, 0.0, 1.0);
  const auto F2 = lct_2d(scene, p2, Direction::Forward);
  out.push_back(below("lct", "parseval_2d", std::abs(F2.energy() - scene.energy()) / scene.energy(), 1e-8));
  const auto back2 = lct_2d(F2, p2, Direction::Inverse);
  out.push_back(below("lct", "round_trip_2d", relative_l2(back2.data, scene.data), 1e-7));
  return out;
}

std::vector<Check> suite_analytic1d(unsigned seed) {
  std::vector<Check> out;
  std::mt19937_64 rng(seed);
  const std::vector<LctParams> params = {LctParams::fourier(), LctParams::complete(1.0, 2.0),
                                         LctParams::complete(0.5, 1.0)};
  double negative = 0.0;
  for (const auto& p : params) {
    for (int s = 0; s < 5; ++s) {
      const auto f = window_raised_cosine(random_signal(rng, 256, 0.1));
      const auto z = gas(f, p.a(), p.b());
      const auto Z = lct_forward_1d(z.base, p);
      double neg = 0.0, total = 0.0;
      for (std::size_t k = 0; k < Z.size(); ++k) {
        total += std::norm(Z.samples[k]);
        if (Z.coord(k) < 0.0) neg += std::norm(Z.samples[k]);
      }
      negative = std::max(negative, neg / total);
    }
  }
  out.push_back(below("analytic1d", "negative_frequency_fraction", negative, 1e-6));

  auto f = SampledSignal1D::centered(1024, 0.05);
  for (std::size_t j = 0; j < f.size(); ++j) f.samples[j] = std::exp(-f.coord(j) * f.coord(j) / 2.0);
  std::uniform_real_distribution<double> ux(-2.0, 2.0), uy(0.5, 2.0);
  std::vector<HalfPlanePoint> pts;
  for (int k = 0; k < 20; ++k) pts.emplace_back(ux(rng), uy(rng));
  double thm1 = 0.0;
  for (const auto& p : params) {
    const auto spec = gas_extend(f, p, pts);
    const auto conv = gas_extend_poisson(f, p.a(), p.b(), pts);
    thm1 = std::max(thm1, relative_l2(spec, conv));
  }
  out.push_back(below("analytic1d", "spectral_vs_poisson_extension", thm1, 1e-3));
  return out;
}

std::vector<Check> suite_monogenic(unsigned) {
  std::vector<Check> out;
  // zero-mean smooth scene: Mexican hat, sigma 3 px
  auto f = gaussian_scene(32, 1.0, 3.0);
  for (std::size_t i = 0; i < f.rows; ++i) {
    for (std::size_t j = 0; j < f.cols; ++j) f.at(i, j) *= 1.0 - (f.x1(j) * f.x1(j) + f.x2(i) * f.x2(i)) / 18.0;
  }
  double riesz = 0.0;
  for (int j = 1; j <= 2; ++j) {
    riesz = std::max(riesz, relative_l2(riesz_spectral(f, 0.0, 1.0, j).data, riesz_spatial_oracle(f, 0.0, 1.0, j).data));
  }
  out.push_back(below("monogenic", "riesz_vs_spatial_oracle", riesz, 5e-2));

  const auto small = gaussian_scene(16, 0.25, 0.35);
  double thm2 = 0.0;
  for (const auto& [a, b] : std::vector<std::pair<double, double>>{{0.0, 1.0}, {1.0, 2.0}, {0.5, 1.0}}) {
    const auto spec = monogenic_extend(small, a, b, 0.5, Boundary::Zero);
    const auto quad = monogenic_extend_quadrature(small, a, b, 0.5);
    std::vector<cdouble> s, q;
    for (std::size_t k = 0; k < small.size(); ++k) {
      s.push_back(spec.f0.data[k]);
      q.push_back(quad.f0.data[k]);
      for (std::size_t j = 0; j < 2; ++j) {
        s.push_back(spec.fj[j].data[k]);
        q.push_back(quad.fj[j].data[k]);
      }
    }
    thm2 = std::max(thm2, relative_l2(s, q));
  }
  out.push_back(below("monogenic", "spectral_vs_poisson_quadrature", thm2, 1e-2));

  const auto scene = gaussian_scene(64, 0.1, 0.5, 0.2, -0.1);
  double resid = 0.0, ablated = std::numeric_limits<double>::infinity();
  for (const auto& [a, b] : std::vector<std::pair<double, double>>{{1.0, 2.0}, {2.0, 1.0}}) {
    const auto m = monogenic_extend(scene, a, b, 0.5);
    resid = std::max(resid, monogenicity_residual(m, true));
    ablated = std::min(ablated, monogenicity_residual(m, false));
  }
  out.push_back(below("monogenic", "chirped_dirac_residual", resid, 5e-2));
  out.push_back(above("monogenic", "ablation_ratio", ablated / resid, 10.0));
  return out;
}

std::vector<Check> suite_features(unsigned) {
  std::vector<Check> out;
  auto scene = gaussian_scene(64, 0.1, 0.6, 0.4, 0.0);
  const auto other = gaussian_scene(64, 0.1, 0.4, -0.6, 0.5);
  for (std::size_t k = 0; k < scene.size(); ++k) scene.data[k] = 0.2 + scene.data[k] + 0.7 * other.data[k];
  for (const auto& p : {LctParams::fourier(), LctParams::complete(1.0, 2.0)}) {
    DerivativeOptions opts;
    opts.boundary = Boundary::Reflect;
    const auto d = feature_derivatives(scene, p, 0.3, opts);
    // interior pixels only: borders use replicated one-sided differences
    RealImage lca(1, 0), mdc(1, 0);
    std::size_t used = 0;
    for (std::size_t i = 1; i + 1 < scene.rows; ++i) {
      for (std::size_t j = 1; j + 1 < scene.cols; ++j) {
        const std::size_t k = i * scene.cols + j;
        if (!d.valid[k]) continue;
        ++used;
        lca.data.push_back(std::hypot(std::abs(d.grad_rho[0].data[k]), std::abs(d.grad_rho[1].data[k])));
        const auto v = mdcpc_vector(d, i, j, true);
        mdc.data.push_back(std::hypot(std::abs(v[0]), std::abs(v[1])));
      }
    }
    const double interior = static_cast<double>((scene.rows - 2) * (scene.cols - 2));
    char name[64];
    std::snprintf(name, sizeof name, "cr_duality_correlation_a%g_b%g", p.a(), p.b());
    out.push_back(above("features", name, pearson(lca, mdc), 0.95));
    std::snprintf(name, sizeof name, "valid_fraction_a%g_b%g", p.a(), p.b());
    out.push_back(above("features", name, static_cast<double>(used) / interior, 0.9));
  }
  return out;
}

std::vector<Check> suite_edge(unsigned) {
  std::vector<Check> out;
  SynthSpec spec;
  const auto step = synth_image(spec);
  out.push_back(below("edge", "fom_identity_error", std::abs(pratt_fom(step.truth.edge, step.truth) - 1.0), 1e-15));
  std::vector<std::uint8_t> shifted(step.truth.edge.size(), 0);
  for (std::size_t i = 0; i < step.truth.rows; ++i) shifted[i * step.truth.cols + spec.size / 2 + 1] = 1;
  out.push_back(below("edge", "fom_shift_error", std::abs(pratt_fom(shifted, step.truth) - 0.9), 1e-12));
  std::vector<std::uint8_t> none(step.truth.edge.size(), 0);
  out.push_back(below("edge", "fom_empty", pratt_fom(none, step.truth), 1e-300));
  for (auto method : {EdgeMethod::Lca, EdgeMethod::Mdcpc}) {
    const auto m = method == EdgeMethod::Lca ? lca_map(step.image, LctParams::fourier(), 1.0)
                                             : mdcpc_map(step.image, LctParams::fourier(), 1.0);
    const double off = std::abs(static_cast<double>(argmax_column(m)) - static_cast<double>(spec.size / 2));
    out.push_back(below("edge", std::string("step_argmax_offset_") + to_string(method), off, 1.5));
  }
  const auto flat = to_field(RealImage(64, 64, 0.5));
  double flat_max = 0.0;
  for (double v : lca_map(flat, LctParams::fourier(), 1.0).strength.data) flat_max = std::max(flat_max, v);
  for (double v : mdcpc_map(flat, LctParams::fourier(), 1.0).strength.data) flat_max = std::max(flat_max, v);
  out.push_back(below("edge", "constant_image_strength", flat_max, 1e-300));
  return out;
}

std::vector<Check> suite_io(unsigned seed) {
  std::vector<Check> out;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> byte(0, 255);
  std::string pgm = "P5\n17 9\n255\n";
  for (int k = 0; k < 17 * 9; ++k) pgm.push_back(static_cast<char>(byte(rng)));
  const auto img = io::parse_pgm(pgm);
  out.push_back(below("io", "pgm_round_trip_mismatch", io::encode_pgm(img) == pgm ? 0.0 : 1.0, 0.5));
  Field2D f(3, 5, 0.5, 0.25);
  for (std::size_t k = 0; k < f.size(); ++k) f.data[k] = {std::sin(1.0 + k), std::cos(2.0 * k)};
  const auto back = std::get<Field2D>(io::parse_binary(io::encode_binary(f)));
  out.push_back(below("io", "binary_round_trip", relative_l2(back.data, f.data), 1e-300));
  return out;
}

const std::map<std::string, std::function<std::vector<Check>(unsigned)>>& suites() {
  static const std::map<std::string, std::function<std::vector<Check>(unsigned)>> table = {
      {"clifford", suite_clifford}, {"lct", suite_lct},         {"analytic1d", suite_analytic1d},
      {"monogenic", suite_monogenic}, {"features", suite_features}, {"edge", suite_edge},
      {"io", suite_io},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [k, fn] : suites()) v.push_back(k);
    return v;
  }();
  return names;
}

std::vector<Check> run_suite(const std::string& suite, unsigned seed) {
  if (suite == "all") {
    std::vector<Check> all;
    for (const auto& [k, fn] : suites()) {
      auto part = fn(seed);
      all.insert(all.end(), part.begin(), part.end());
    }
    return all;
  }
  const auto it = suites().find(suite);
  if (it == suites().end()) throw std::invalid_argument("unknown suite: " + suite);
  return it->second(seed);
}

}  // namespace monolct::cli
