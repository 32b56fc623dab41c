// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The monolct Authors

#include <random>

#include "doctest.h"
#include "monolct/lct.hpp"
#include "monolct/monogenic.hpp"
#include "test_util.hpp"

using namespace monolct;
using monolct::test::kI;
using monolct::test::kPi;

namespace {

// trigonometric polynomial, periodic on the grid, no DC and no Nyquist content
Field2D harmonic_field(std::size_t n, double dx, std::mt19937_64& rng) {
  Field2D f(n, n, dx, dx);
  const double len = static_cast<double>(n) * dx;
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int t = 0; t < 6; ++t) {
    const int m1 = static_cast<int>(u(rng) * 5.0);
    const int m2 = 1 + static_cast<int>((u(rng) + 1.0) * 2.0);
    const double ph = kPi * u(rng);
    const double amp = u(rng);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        f.at(i, j) += amp * std::cos(2.0 * kPi * (m1 * f.x1(j) + m2 * f.x2(i)) / len + ph);
      }
    }
  }
  return f;
}

Field2D mexican_hat(std::size_t n, double dx, double sigma) {
  auto f = test::gaussian_field(n, dx, sigma);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double r2 = f.x1(j) * f.x1(j) + f.x2(i) * f.x2(i);
      f.at(i, j) *= 1.0 - r2 / (2.0 * sigma * sigma);
    }
  }
  return f;
}

std::vector<cdouble> channels(const MonogenicField& m) {
  std::vector<cdouble> v(m.f0.data);
  for (const auto& c : m.fj) v.insert(v.end(), c.data.begin(), c.data.end());
  return v;
}

double max_imag(const Field2D& f) {
  double m = 0.0;
  for (auto v : f.data) m = std::max(m, std::abs(v.imag()));
  return m;
}

}  // namespace

TEST_CASE("boundary names") {
  CHECK(parse_boundary("periodic") == Boundary::Periodic);
  CHECK(parse_boundary("reflect") == Boundary::Reflect);
  CHECK(parse_boundary("zero") == Boundary::Zero);
  CHECK(std::string(to_string(Boundary::Reflect)) == "reflect");
  CHECK_THROWS_AS(parse_boundary("wrap"), std::invalid_argument);
}

TEST_CASE("Riesz transform of a plane wave") {
  const std::size_t n = 64;
  Field2D f(n, n, 2.0 * kPi / n, 2.0 * kPi / n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) f.at(i, j) = std::cos(5.0 * f.x1(j));
  }
  const auto r1 = riesz_spectral(f, 0.0, 1.0, 1);
  const auto r2 = riesz_spectral(f, 0.0, 1.0, 2);
  double e1 = 0.0, e2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      e1 = std::max(e1, std::abs(r1.at(i, j) - std::sin(5.0 * f.x1(j))));
      e2 = std::max(e2, std::abs(r2.at(i, j)));
    }
  }
  CHECK(e1 < 1e-10);
  CHECK(e2 < 1e-10);
  CHECK_THROWS(riesz_spectral(f, 0.0, 1.0, 3));
  CHECK_THROWS_AS(riesz_spectral(f, 0.0, 0.0, 1), InvalidParams);
}

TEST_CASE("Riesz energy splits the input energy") {
  std::mt19937_64 rng(41);
  const auto f = harmonic_field(64, 0.1, rng);
  for (const auto& [a, b] : std::vector<std::pair<double, double>>{{0, 1}, {0, 2}}) {
    const double e = riesz_spectral(f, a, b, 1).energy() + riesz_spectral(f, a, b, 2).energy();
    CHECK(std::abs(e - f.energy()) / f.energy() < 1e-6);
    const auto m = monogenic_signal(f, a, b);
    double total = 0.0;
    for (auto v : channels(m)) total += std::norm(v);
    total *= f.dx * f.dy;
    CHECK(std::abs(total - 2.0 * f.energy()) / f.energy() < 1e-6);
  }
}

TEST_CASE("constant and zero inputs") {
  Field2D c(16, 16, 1.0, 1.0);
  for (auto& v : c.data) v = 3.0;
  for (int j = 1; j <= 2; ++j) {
    for (auto v : riesz_spectral(c, 0.0, 1.0, j).data) CHECK(std::abs(v) < 1e-12);
  }
  const Field2D zero(16, 16, 1.0, 1.0);
  for (auto v : riesz_spatial_oracle(zero, 0.0, 1.0, 1).data) CHECK(v == cdouble(0.0));
  for (auto v : channels(monogenic_signal(zero, 1.0, 2.0))) CHECK(v == cdouble(0.0));
}

TEST_CASE("spatial oracle agrees with the spectral transform") {
  const auto f = mexican_hat(32, 1.0, 3.0);
  for (int j = 1; j <= 2; ++j) {
    CHECK(relative_l2(riesz_spectral(f, 0.0, 1.0, j).data, riesz_spatial_oracle(f, 0.0, 1.0, j).data) < 5e-2);
  }
  CHECK_THROWS(riesz_spatial_oracle(Field2D(65, 65), 0.0, 1.0, 1));
}

TEST_CASE("spatial oracle keeps the chirp sign convention") {
  const auto f = mexican_hat(32, 0.25, 0.75);
  for (const auto& [a, b] : std::vector<std::pair<double, double>>{{0.2, 1}, {-0.3, 2}}) {
    CHECK(relative_l2(riesz_spectral(f, a, b, 1).data, riesz_spatial_oracle(f, a, b, 1).data) < 5e-2);
  }
}

TEST_CASE("odd symmetry of the Riesz transform") {
  // odd size keeps the centred grid symmetric
  const auto f = test::gaussian_field(31, 1.0, 3.0, 0.0, 2.0);
  for (const auto& r : {riesz_spatial_oracle(f, 0.0, 1.0, 1), riesz_spectral(f, 0.0, 1.0, 1)}) {
    double defect = 0.0;
    for (std::size_t i = 0; i < 31; ++i) {
      for (std::size_t j = 0; j < 31; ++j) defect = std::max(defect, std::abs(r.at(i, j) + r.at(i, 30 - j)));
    }
    CHECK(defect < 1e-10);
  }
}

TEST_CASE("chirp covariance") {
  std::mt19937_64 rng(42);
  const auto f = harmonic_field(32, 0.2, rng);
  const double a = 1.0, b = 2.0;
  Field2D g = f;
  for (std::size_t i = 0; i < g.rows; ++i) {
    for (std::size_t j = 0; j < g.cols; ++j) {
      g.at(i, j) *= std::exp(kI * a * (g.x1(j) * g.x1(j) + g.x2(i) * g.x2(i)) / (2.0 * b));
    }
  }
  for (int axis = 1; axis <= 2; ++axis) {
    auto r = riesz_spectral(g, 0.0, 1.0, axis);
    for (std::size_t i = 0; i < r.rows; ++i) {
      for (std::size_t j = 0; j < r.cols; ++j) {
        r.at(i, j) *= std::exp(-kI * a * (r.x1(j) * r.x1(j) + r.x2(i) * r.x2(i)) / (2.0 * b));
      }
    }
    CHECK(test::max_abs_diff(riesz_spectral(f, a, b, axis).data, r.data) < 1e-12);
  }
}

TEST_CASE("multiplier identity of the monogenic signal") {
  std::mt19937_64 rng(43);
  std::normal_distribution<double> nd;
  Field2D f(32, 32, 0.2, 0.2);
  for (auto& v : f.data) v = nd(rng);
  const auto m = monogenic_signal(f, 0.0, 1.0);
  const auto F = lct_2d(f, LctParams::fourier(), Direction::Forward);
  double err = 0.0, scale = 0.0;
  for (std::size_t c = 0; c < 2; ++c) {
    const auto Fj = lct_2d(m.fj[c], LctParams::fourier(), Direction::Forward);
    for (std::size_t i = 1; i < F.rows; ++i) {
      for (std::size_t j = 1; j < F.cols; ++j) {
        const double r = std::hypot(F.x1(j), F.x2(i));
        if (r == 0.0) continue;
        const double xi = c == 0 ? F.x1(j) : F.x2(i);
        err = std::max(err, std::abs(Fj.at(i, j) - kI * xi / r * F.at(i, j)));
        scale = std::max(scale, std::abs(F.at(i, j)));
      }
    }
  }
  CHECK(err < 1e-6 * scale);
}

TEST_CASE("real input at a = 0 gives real channels") {
  const auto f = test::gaussian_field(32, 0.2, 0.6, 0.3, 0.1);
  const auto m = monogenic_signal(f, 0.0, 1.0);
  CHECK(test::max_abs_diff(m.f0.data, f.data) < 1e-15);
  CHECK(max_imag(m.fj[0]) < 1e-10);
  CHECK(max_imag(m.fj[1]) < 1e-10);
  const auto p = m.at(5, 7);
  CHECK(p.dim() == 2);
}

TEST_CASE("monogenic signal matches a direct DFT construction") {
  std::mt19937_64 rng(44);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const std::size_t n = 12;
  Field2D f(n, n, 1.0, 1.0);
  for (auto& v : f.data) v = u(rng);
  const auto m = monogenic_signal(f, 0.0, 1.0);
  // naive DFT, multiplier i u_j/|u|, inverse DFT
  for (std::size_t c = 0; c < 2; ++c) {
    double err = 0.0;
    for (std::size_t x2 = 0; x2 < n; ++x2) {
      for (std::size_t x1 = 0; x1 < n; ++x1) {
        cdouble acc = 0.0;
        for (std::size_t k2 = 0; k2 < n; ++k2) {
          for (std::size_t k1 = 0; k1 < n; ++k1) {
            const long s1 = k1 < n / 2 ? static_cast<long>(k1) : static_cast<long>(k1) - static_cast<long>(n);
            const long s2 = k2 < n / 2 ? static_cast<long>(k2) : static_cast<long>(k2) - static_cast<long>(n);
            if (s1 == 0 && s2 == 0) continue;
            const long sj = c == 0 ? s1 : s2;
            if (sj == -static_cast<long>(n / 2)) continue;
            cdouble F = 0.0;
            for (std::size_t t2 = 0; t2 < n; ++t2) {
              for (std::size_t t1 = 0; t1 < n; ++t1) {
                F += f.at(t2, t1) * std::exp(-2.0 * kPi * kI * static_cast<double>(k1 * t1 + k2 * t2) / static_cast<double>(n));
              }
            }
            const double mag = std::hypot(static_cast<double>(s1), static_cast<double>(s2));
            acc += kI * static_cast<double>(sj) / mag * F *
                   std::exp(2.0 * kPi * kI * static_cast<double>(k1 * x1 + k2 * x2) / static_cast<double>(n));
          }
        }
        acc /= static_cast<double>(n * n);
        err = std::max(err, std::abs(acc - m.fj[c].at(x2, x1)));
      }
    }
    CHECK(err < 1e-10);
  }
}

TEST_CASE("extension near the boundary matches the monogenic signal") {
  const auto f = test::gaussian_field(64, 0.1, 0.5, 0.2, -0.1);
  for (const auto& [a, b] : std::vector<std::pair<double, double>>{{0, 1}, {1, 2}}) {
    const auto m0 = monogenic_signal(f, a, b);
    const auto me = monogenic_extend(f, a, b, 1e-3 * f.dx);
    CHECK(relative_l2(channels(me), channels(m0)) < 1e-2);
  }
  CHECK_THROWS(monogenic_extend(f, 0.0, 1.0, 0.0));
}

TEST_CASE("spectral extension equals Poisson quadrature") {
  const auto f = test::gaussian_field(16, 0.25, 0.35);
  for (const auto& [a, b] : std::vector<std::pair<double, double>>{{0, 1}, {1, 2}}) {
    const auto spec = monogenic_extend(f, a, b, 0.5, Boundary::Zero);
    const auto quad = monogenic_extend_quadrature(f, a, b, 0.5);
    CHECK(relative_l2(channels(spec), channels(quad)) < 1e-2);
  }
}

TEST_CASE("Poisson smoothing flattens the scalar channel") {
  auto f = test::gaussian_field(64, 0.1, 0.4, 0.5, 0.0);
  double prev = std::numeric_limits<double>::infinity();
  for (double x0 : {0.05, 0.1, 0.2, 0.4, 0.8, 1.6}) {
    const auto m = monogenic_extend(f, 0.0, 1.0, x0);
    double mean = 0.0;
    for (auto v : m.f0.data) mean += v.real();
    mean /= static_cast<double>(m.f0.size());
    double var = 0.0;
    for (auto v : m.f0.data) var += (v.real() - mean) * (v.real() - mean);
    CHECK(var < prev);
    prev = var;
  }
}

TEST_CASE("Poisson semigroup at a = 0") {
  const auto f = test::gaussian_field(64, 0.1, 0.4, 0.5, 0.0);
  const auto direct = monogenic_extend(f, 0.0, 1.0, 0.7);
  const auto first = monogenic_extend(f, 0.0, 1.0, 0.3);
  const auto second = monogenic_extend(first.f0, 0.0, 1.0, 0.4);
  CHECK(relative_l2(second.f0.data, direct.f0.data) < 1e-6);
}

TEST_CASE("x0 derivative") {
  const auto f = test::gaussian_field(64, 0.1, 0.5, 0.2, -0.1);
  for (const auto& [a, b] : std::vector<std::pair<double, double>>{{0, 1}, {1, 2}}) {
    const double x0 = 0.5, d = x0 / 100.0;
    const auto exact = ddx0(monogenic_extend(f, a, b, x0));
    const auto hi = channels(monogenic_extend(f, a, b, x0 + d));
    const auto lo = channels(monogenic_extend(f, a, b, x0 - d));
    std::vector<cdouble> fd(hi.size());
    for (std::size_t k = 0; k < fd.size(); ++k) fd[k] = (hi[k] - lo[k]) / (2.0 * d);
    CHECK(relative_l2(channels(exact), fd) < 1e-4);
  }
  Field2D c(16, 16, 0.1, 0.1);
  for (auto& v : c.data) v = 2.0;
  for (auto v : channels(ddx0(monogenic_extend(c, 0.0, 1.0, 0.5)))) CHECK(std::abs(v) < 1e-12);

  const auto g = test::gaussian_field(64, 0.1, 0.3, -0.5, 0.4);
  Field2D sum = f;
  for (std::size_t k = 0; k < sum.size(); ++k) sum.data[k] += g.data[k];
  const auto lhs = channels(ddx0(monogenic_extend(sum, 1.0, 2.0, 0.5)));
  const auto r1 = channels(ddx0(monogenic_extend(f, 1.0, 2.0, 0.5)));
  const auto r2 = channels(ddx0(monogenic_extend(g, 1.0, 2.0, 0.5)));
  double err = 0.0;
  for (std::size_t k = 0; k < lhs.size(); ++k) err = std::max(err, std::abs(lhs[k] - r1[k] - r2[k]));
  CHECK(err < 1e-12);

  MonogenicField bare;
  CHECK_THROWS(ddx0(bare));
}

TEST_CASE("chirped extension is almost monogenic") {
  const auto f = test::gaussian_field(64, 0.1, 0.5, 0.2, -0.1);
  CHECK(monogenicity_residual(monogenic_extend(f, 0.0, 1.0, 1.0)) < 5e-2);
  const auto m = monogenic_extend(f, 1.0, 1.0, 0.5);
  const double with = monogenicity_residual(m, true);
  const double without = monogenicity_residual(m, false);
  CHECK(with < 5e-2);
  CHECK(without > 10.0 * with);
  CHECK(monogenicity_residual(monogenic_extend(Field2D(16, 16, 0.1, 0.1), 1.0, 1.0, 0.5)) == 0.0);
}

TEST_CASE("boundary modes agree away from the border") {
  const auto f = test::gaussian_field(64, 0.1, 0.3);
  const auto per = monogenic_extend(f, 0.0, 1.0, 0.2, Boundary::Periodic);
  const auto ref = monogenic_extend(f, 0.0, 1.0, 0.2, Boundary::Reflect);
  const auto zer = monogenic_extend(f, 0.0, 1.0, 0.2, Boundary::Zero);
  CHECK(std::abs(per.f0.at(32, 32) - ref.f0.at(32, 32)) < 2e-2);
  CHECK(std::abs(per.f0.at(32, 32) - zer.f0.at(32, 32)) < 2e-2);
  CHECK(ref.boundary == Boundary::Reflect);
  CHECK(ref.rows() == 64);
}
