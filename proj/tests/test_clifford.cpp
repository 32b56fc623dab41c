// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The monolct Authors

#include <random>

#include "doctest.h"
#include "monolct/clifford.hpp"
#include "test_util.hpp"

using namespace monolct;
using monolct::test::kI;
using monolct::test::kPi;

namespace {

CliffordNum random_clifford(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<cdouble> c(std::size_t{1} << n);
  for (auto& v : c) v = {u(rng), u(rng)};
  return CliffordNum(n, c);
}

Paravector random_paravector(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::vector<cdouble> v(static_cast<std::size_t>(n));
  for (auto& x : v) x = {u(rng), u(rng)};
  return Paravector(cdouble(u(rng), u(rng)), v);
}

// x = 1+i + (2+5i)e1 + (1+2i)e2 + (3+i)e3 + (2+6i)e12 + (5+3i)e13 + (1+i)e23 + (6+9i)e123
CliffordNum sample_number() {
  return CliffordNum(3, {{1, 1}, {2, 5}, {1, 2}, {3, 1}, {2, 6}, {5, 3}, {1, 1}, {6, 9}});
}

}  // namespace

TEST_CASE("basis ordering is grade then lexicographic") {
  const char* names[] = {"e0", "e1", "e2", "e3", "e12", "e13", "e23", "e123"};
  for (std::size_t k = 0; k < 8; ++k) CHECK(CliffordNum::basis_name(3, k) == names[k]);
  CHECK(CliffordNum::grade_of(3, 7) == 3);
  CHECK(CliffordNum::grade_of(2, 3) == 2);
  for (std::size_t k = 0; k < 8; ++k) CHECK(CliffordNum::index_of_mask(3, CliffordNum::blade_mask(3, k)) == k);
  CHECK(CliffordNum(1).size() == 2);
  CHECK(CliffordNum(3).size() == 8);
}

TEST_CASE("generator products") {
  const auto e1 = CliffordNum::basis_vector(2, 1);
  const auto e2 = CliffordNum::basis_vector(2, 2);
  const auto one = CliffordNum::scalar(2, 1.0);
  CHECK((e1 * e1 + one).norm() == 0.0);
  const auto e12 = e1 * e2;
  CHECK(e12[3] == cdouble(1.0));
  CHECK(e12.norm() == doctest::Approx(1.0));
  CHECK((e2 * e1 + e12).norm() == 0.0);
  CHECK(((one + e1) * one - (one + e1)).norm() == 0.0);
  CHECK((e12 * e12 + one).norm() == 0.0);
}

TEST_CASE("anticommutation for every pair of generators") {
  for (int n = 1; n <= 3; ++n) {
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        const auto ei = CliffordNum::basis_vector(n, i);
        const auto ej = CliffordNum::basis_vector(n, j);
        const auto s = ei * ej + ej * ei;
        const auto expect = CliffordNum::scalar(n, i == j ? -2.0 : 0.0);
        CHECK((s - expect).norm() == 0.0);
      }
    }
  }
}

TEST_CASE("associativity on random triples") {
  std::mt19937_64 rng(7);
  for (int n = 1; n <= 3; ++n) {
    for (int t = 0; t < 100; ++t) {
      const auto a = random_clifford(rng, n), b = random_clifford(rng, n), c = random_clifford(rng, n);
      CHECK(((a * b) * c - a * (b * c)).norm() < 1e-12);
    }
  }
}

TEST_CASE("product is bilinear") {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 50; ++t) {
    const auto a = random_clifford(rng, 3), b = random_clifford(rng, 3), c = random_clifford(rng, 3);
    const cdouble s(0.3, -1.2);
    CHECK((a * (b + c * s) - (a * b + (a * c) * s)).norm() < 1e-12);
  }
}

TEST_CASE("dimension mismatch is rejected") {
  CHECK_THROWS_AS(CliffordNum::basis_vector(2, 1) * CliffordNum::basis_vector(3, 1), std::invalid_argument);
  CHECK_THROWS(CliffordNum(4));
  CHECK_THROWS(CliffordNum(2, std::vector<cdouble>(3)));
}

TEST_CASE("grade parts of the sample number") {
  const auto parts = grade_parts(sample_number());
  CHECK(parts.scalar == cdouble(1, 1));
  REQUIRE(parts.vector.size() == 3);
  CHECK(parts.vector[0] == cdouble(2, 5));
  CHECK(parts.vector[1] == cdouble(1, 2));
  CHECK(parts.vector[2] == cdouble(3, 1));
  CHECK(parts.rest[0] == cdouble(0.0));
  CHECK(parts.rest[4] == cdouble(2, 6));
  CHECK(parts.rest[7] == cdouble(6, 9));
}

TEST_CASE("grade projections sum back to the element") {
  std::mt19937_64 rng(9);
  for (int n = 1; n <= 3; ++n) {
    const auto x = random_clifford(rng, n);
    CliffordNum sum(n);
    for (int g = 0; g <= n; ++g) sum += x.grade(g);
    CHECK((sum - x).norm() == 0.0);
  }
  const auto zero = grade_parts(CliffordNum(2));
  CHECK(zero.scalar == cdouble(0.0));
  CHECK(zero.vector == std::vector<cdouble>(2));
  CHECK(zero.rest.norm() == 0.0);
}

TEST_CASE("norm is the coefficient sum") {
  const auto x = sample_number();
  double s = 0.0;
  for (auto c : x.coeffs()) s += std::norm(c);
  CHECK(x.norm() == doctest::Approx(std::sqrt(s)).epsilon(1e-15));
}

TEST_CASE("debug serialization order") {
  const auto s = to_string(CliffordNum(2, {{1, 0}, {0, 2}, {0, 0}, {-1, 0.5}}));
  CHECK(s.find("e0") < s.find("e1"));
  CHECK(s.find("e1") < s.find("e2"));
  CHECK(s.find("e2") < s.find("e12"));
}

TEST_CASE("paravector embedding and conjugate") {
  std::mt19937_64 rng(10);
  for (int n = 1; n <= 3; ++n) {
    const auto p = random_paravector(rng, n);
    const auto x = p.to_clifford();
    for (std::size_t k = 0; k < x.size(); ++k) {
      if (CliffordNum::grade_of(n, k) >= 2) CHECK(x[k] == cdouble(0.0));
    }
    const auto back = Paravector::from_clifford(x);
    CHECK(back.scalar() == p.scalar());
    const auto cc = p.conj().conj();
    CHECK(cc.scalar() == p.scalar());
    for (int j = 0; j < n; ++j) {
      CHECK(back.vec(j) == p.vec(j));
      CHECK(cc.vec(j) == p.vec(j));
      CHECK(p.conj().vec(j) == -p.vec(j));
    }
  }
  CHECK_THROWS(Paravector::from_clifford(sample_number()));
}

TEST_CASE("complex sqrt examples and branch") {
  CHECK(std::abs(complex_sqrt(-1.0) - kI) < 1e-15);
  CHECK(std::abs(complex_sqrt(4.0) - 2.0) < 1e-15);
  CHECK(std::abs(complex_sqrt(kI * 2.0 * kPi) - std::sqrt(2.0 * kPi) * std::exp(kI * kPi / 4.0)) < 1e-14);
  CHECK(complex_sqrt(0.0) == cdouble(0.0));
  // the negative real axis carries arg = pi, including a signed zero imaginary part
  CHECK(std::abs(complex_sqrt(cdouble(-4.0, -0.0)) - 2.0 * kI) < 1e-15);
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  for (int t = 0; t < 1000; ++t) {
    const cdouble z(u(rng), u(rng));
    const auto r = complex_sqrt(z);
    CHECK(std::abs(r * r - z) < 1e-12 * (1.0 + std::abs(z)));
    CHECK(std::arg(r) > -kPi / 2.0);
    CHECK(std::arg(r) <= kPi / 2.0);
  }
}

TEST_CASE("complex ln is principal") {
  CHECK(std::abs(complex_ln(-1.0) - kI * kPi) < 1e-15);
  CHECK(std::abs(complex_ln(cdouble(-1.0, -0.0)) - kI * kPi) < 1e-15);
  CHECK(std::abs(complex_ln(kI) - kI * kPi / 2.0) < 1e-15);
}

TEST_CASE("complex arctan examples") {
  CHECK(complex_arctan(0.0) == cdouble(0.0));
  CHECK(std::abs(complex_arctan(1.0) - kPi / 4.0) < 1e-15);
  CHECK(std::abs(complex_arctan(0.5 * kI) - kI * std::log(3.0) / 2.0) < 1e-15);
  CHECK_THROWS_AS(complex_arctan(kI), std::domain_error);
  CHECK_THROWS_AS(complex_arctan(-kI), std::domain_error);
  for (double x : {-100.0, -1.5, -0.2, 0.7, 30.0}) {
    const auto r = complex_arctan(x);
    CHECK(std::abs(r.imag()) < 1e-15);
    CHECK(std::abs(r.real() - std::atan(x)) < 1e-14);
  }
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int t = 0; t < 200; ++t) {
    const cdouble z(u(rng), u(rng));
    CHECK(std::abs(std::tan(complex_arctan(z)) - z) < 1e-10 * (1.0 + std::abs(z)));
  }
}

TEST_CASE("polar decomposition examples") {
  const auto e1 = polar_decompose(Paravector(0.0, {1.0, 0.0}));
  REQUIRE(e1.defined);
  CHECK(std::abs(e1.amplitude - 1.0) < 1e-15);
  CHECK(std::abs(e1.phase - kPi / 2.0) < 1e-15);
  CHECK(std::abs(e1.unit[0] - 1.0) < 1e-15);
  CHECK(std::abs(e1.unit[1]) < 1e-15);

  const auto p2 = polar_decompose(Paravector(1.0, {1.0, 0.0}));
  REQUIRE(p2.defined);
  CHECK(std::abs(p2.amplitude - std::sqrt(2.0)) < 1e-15);
  CHECK(std::abs(p2.phase - kPi / 4.0) < 1e-15);
  CHECK(std::abs(p2.unit[0] - 1.0) < 1e-15);

  const auto p3 = polar_decompose(Paravector(0.0, {kI, 0.0}));
  REQUIRE(p3.defined);
  CHECK(std::abs(p3.amplitude - kI) < 1e-15);
  CHECK(std::abs(p3.phase - kPi / 2.0) < 1e-15);
  CHECK(std::abs(p3.unit[0] - 1.0) < 1e-15);
}

TEST_CASE("polar decomposition flags vanishing pseudo-norms") {
  CHECK_FALSE(polar_decompose(Paravector(2.0, {0.0, 0.0})).defined);
  CHECK_FALSE(polar_decompose(Paravector(0.0, {0.0, 0.0})).defined);
  // 1^2 + i^2 = 0: isotropic vector part
  CHECK_FALSE(polar_decompose(Paravector(1.0, {1.0, kI})).defined);
  const auto undefined = polar_decompose(Paravector(2.0, {0.0, 0.0}));
  CHECK(undefined.reconstruct().scalar() == cdouble(0.0));
}

TEST_CASE("polar reconstruction on random paravectors") {
  std::mt19937_64 rng(13);
  int checked = 0;
  for (int t = 0; t < 1000; ++t) {
    const int n = 1 + t % 3;
    const auto p = random_paravector(rng, n);
    const auto polar = polar_decompose(p);
    if (!polar.defined) continue;
    ++checked;
    const auto back = polar.reconstruct();
    const double scale = p.to_clifford().norm();
    CHECK((back.to_clifford() - p.to_clifford()).norm() < 1e-10 * scale);
    // I I = -1
    CliffordNum unit(n);
    for (int j = 0; j < n; ++j) unit[static_cast<std::size_t>(j + 1)] = polar.unit[static_cast<std::size_t>(j)];
    CHECK((unit * unit + CliffordNum::scalar(n, 1.0)).norm() < 1e-10);
  }
  CHECK(checked > 990);
}

TEST_CASE("real paravectors give real amplitude and phase in range") {
  std::mt19937_64 rng(14);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int t = 0; t < 200; ++t) {
    const Paravector p(u(rng), {u(rng), u(rng)});
    const auto polar = polar_decompose(p);
    REQUIRE(polar.defined);
    CHECK(std::abs(polar.phase.imag()) < 1e-12);
    CHECK(std::abs(polar.amplitude.imag()) < 1e-12);
  }
}
