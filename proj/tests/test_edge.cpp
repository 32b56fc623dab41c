// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The monolct Authors

#include <algorithm>
#include <cstdlib>

#include "doctest.h"
#include "monolct/edge.hpp"
#include "monolct/features.hpp"
#include "test_util.hpp"

using namespace monolct;

namespace {

CliffordField scalar_field(const Field2D& f) {
  auto cf = CliffordField::zeros(2, f);
  cf.blades[0] = f;
  return cf;
}

double max_strength(const EdgeMap& m) { return *std::max_element(m.strength.data.begin(), m.strength.data.end()); }

}  // namespace

TEST_CASE("Dirac operator on linear and quadratic fields") {
  Field2D lin(16, 16, 0.5, 0.5), quad(16, 16, 0.5, 0.5);
  for (std::size_t i = 0; i < 16; ++i) {
    for (std::size_t j = 0; j < 16; ++j) {
      lin.at(i, j) = lin.x1(j);
      quad.at(i, j) = quad.x1(j) * quad.x1(j) + quad.x2(i) * quad.x2(i);
    }
  }
  const auto dl = dirac_apply(scalar_field(lin));
  const auto dq = dirac_apply(scalar_field(quad));
  for (std::size_t i = 1; i < 15; ++i) {
    for (std::size_t j = 1; j < 15; ++j) {
      CHECK(std::abs(dl.blades[1].at(i, j) - 1.0) < 1e-12);
      CHECK(std::abs(dl.blades[2].at(i, j)) < 1e-12);
      CHECK(std::abs(dq.blades[1].at(i, j) - 2.0 * quad.x1(j)) < 1e-12);
      CHECK(std::abs(dq.blades[2].at(i, j) - 2.0 * quad.x2(i)) < 1e-12);
      CHECK(std::abs(dq.blades[0].at(i, j)) == 0.0);
      CHECK(std::abs(dq.blades[3].at(i, j)) == 0.0);
    }
  }
}

TEST_CASE("Dirac operator on a vector field follows the Clifford product") {
  // f = x1 e1 + x2 e2: D f = e1 e1 + e2 e2 = -2
  Field2D x1(8, 8), x2(8, 8);
  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t j = 0; j < 8; ++j) {
      x1.at(i, j) = x1.x1(j);
      x2.at(i, j) = x2.x2(i);
    }
  }
  auto cf = CliffordField::zeros(2, x1);
  cf.blades[1] = x1;
  cf.blades[2] = x2;
  const auto d = dirac_apply(cf);
  CHECK(std::abs(d.blades[0].at(4, 4) + 2.0) < 1e-12);
  CHECK(std::abs(d.blades[3].at(4, 4)) < 1e-12);
  auto bad = cf;
  bad.blades.pop_back();
  CHECK_THROWS_AS(dirac_apply(bad), GridMismatch);
}

TEST_CASE("(D I) I has no trivector part for a planar unit field") {
  const auto f = test::gaussian_field(32, 0.1, 0.5);
  const auto fm = compute_features(monogenic_extend(f, 0.0, 1.0, 0.3));
  auto unit = CliffordField::zeros(3, f);
  unit.blades[1] = fm.unit[0];
  unit.blades[2] = fm.unit[1];
  const auto du = dirac_apply(unit);
  double tri = 0.0;
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (!fm.defined[k]) continue;
    CliffordNum a(3), b(3);
    for (std::size_t s = 0; s < 8; ++s) {
      a[s] = du.blades[s].data[k];
      b[s] = unit.blades[s].data[k];
    }
    tri = std::max(tri, std::abs((a * b)[7]));
  }
  CHECK(tri < 1e-12);
}

TEST_CASE("synthetic scenes") {
  SynthSpec spec;
  const auto step = synth_image(spec);
  CHECK(step.image.rows == 128);
  CHECK(step.truth.count() == 128);
  for (std::size_t i = 0; i < 128; ++i) CHECK(step.truth.edge[i * 128 + 64] == 1);
  CHECK(std::abs(step.image.at(0, 0) - 64.0 / 255.0) < 1e-15);
  CHECK(std::abs(step.image.at(0, 127) - 192.0 / 255.0) < 1e-15);

  spec.kind = SynthKind::Bars;
  const auto bars = synth_image(spec);
  std::size_t boundary_columns = 0;
  for (std::size_t j = 0; j < 128; ++j) boundary_columns += bars.truth.edge[j];
  CHECK(boundary_columns == 8);
  CHECK(bars.truth.count() == 8 * 128);

  spec.kind = SynthKind::Disk;
  const auto disk = synth_image(spec);
  for (std::size_t i = 0; i < 128; ++i) {
    for (std::size_t j = 0; j < 128; ++j) {
      if (!disk.truth.edge[i * 128 + j]) continue;
      const double r = std::hypot(disk.image.x1(j), disk.image.x2(i));
      CHECK(std::abs(r - 32.0) < 1.0);
    }
  }
  CHECK(disk.truth.count() >= 170);
  CHECK(disk.truth.count() < 260);

  spec.kind = SynthKind::Ramp;
  CHECK(synth_image(spec).truth.count() > 0);
  CHECK(parse_synth_kind("disk") == SynthKind::Disk);
  CHECK(std::string(to_string(SynthKind::Bars)) == "bars");
  CHECK_THROWS(parse_synth_kind("checker"));
  spec.size = 16;
  CHECK_THROWS(synth_image(spec));
}

TEST_CASE("seeded noise is deterministic") {
  SynthSpec spec;
  spec.noise_sigma = 8.0;
  spec.seed = 5;
  const auto a = synth_image(spec), b = synth_image(spec);
  CHECK(a.image.data == b.image.data);
  spec.seed = 6;
  CHECK(synth_image(spec).image.data != a.image.data);
  CHECK(a.truth.edge == synth_image(SynthSpec{}).truth.edge);
}

TEST_CASE("Pratt figure of merit") {
  const auto step = synth_image(SynthSpec{});
  CHECK(pratt_fom(step.truth.edge, step.truth) == 1.0);
  std::vector<std::uint8_t> shifted(step.truth.edge.size(), 0);
  for (std::size_t i = 0; i < 128; ++i) shifted[i * 128 + 65] = 1;
  CHECK(std::abs(pratt_fom(shifted, step.truth) - 0.9) < 1e-12);
  CHECK(pratt_fom(std::vector<std::uint8_t>(step.truth.edge.size(), 0), step.truth) == 0.0);
  CHECK_THROWS_AS(pratt_fom(std::vector<std::uint8_t>(3, 0), step.truth), GridMismatch);
  const auto m = lca_map(step.image, LctParams::fourier(), 1.0);
  CHECK_THROWS(pratt_fom(m, step.truth, 0.0));
  CHECK_THROWS(pratt_fom(m, step.truth, 1.0));
  const double fom = pratt_fom(m, step.truth, 0.3);
  CHECK(fom > 0.0);
  CHECK(fom <= 1.0);
}

TEST_CASE("percentile normalization") {
  RealImage raw(1, 100);
  for (std::size_t k = 0; k < 100; ++k) raw.data[k] = static_cast<double>(k + 1);
  double scale = 0.0;
  const auto n = percentile_normalize(raw, 99.0, &scale);
  CHECK(scale == 99.0);
  CHECK(n.data[98] == 1.0);
  CHECK(n.data[99] == 1.0);
  CHECK(n.data[0] == doctest::Approx(1.0 / 99.0));
  CHECK(percentile_normalize(RealImage(3, 3, 0.0), 99.0).data == std::vector<double>(9, 0.0));
  CHECK_THROWS(percentile_normalize(raw, 0.0));
}

TEST_CASE("step edge is localized by both methods") {
  const auto step = synth_image(SynthSpec{});
  for (double x0 : {0.5, 1.0}) {
    const auto lca = lca_map(step.image, LctParams::fourier(), x0);
    const auto mdc = mdcpc_map(step.image, LctParams::fourier(), x0);
    CHECK(std::abs(static_cast<long>(argmax_column(lca)) - 64) <= 1);
    CHECK(std::abs(static_cast<long>(argmax_column(mdc)) - 64) <= 1);
    for (const auto* m : {&lca, &mdc}) {
      for (double v : m->strength.data) {
        CHECK(v >= 0.0);
        CHECK(v <= 1.0);
      }
    }
    CHECK(lca.method == EdgeMethod::Lca);
    CHECK(mdc.method == EdgeMethod::Mdcpc);
    CHECK(lca.percentile == 99.0);
    CHECK(lca.x0 == x0);
  }
}

TEST_CASE("constant image gives a zero map") {
  const auto flat = to_field(RealImage(48, 48, 0.5));
  CHECK(max_strength(lca_map(flat, LctParams::fourier(), 1.0)) == 0.0);
  CHECK(max_strength(mdcpc_map(flat, LctParams::fourier(), 1.0)) == 0.0);
  CHECK_THROWS(lca_map(flat, LctParams::fourier(), 0.0));
  CHECK_THROWS(mdcpc_map(flat, LctParams::fourier(), -1.0));
}

TEST_CASE("boundary distance and argmax helpers") {
  RealImage s(4, 6, 0.0);
  for (std::size_t i = 0; i < 4; ++i) s.at(i, 2) = 1.0;
  CHECK(argmax_column(s) == 2);
  CHECK(argmax_column(RealImage(2, 3, 0.0)) == 0);
  const auto d = detect(s, 0.5);
  CHECK(std::count(d.begin(), d.end(), 1) == 4);
  GroundTruth t{4, 6, std::vector<std::uint8_t>(24, 0), "test"};
  for (std::size_t i = 0; i < 4; ++i) t.edge[i * 6 + 4] = 1;
  for (double v : distances_to_truth(d, t)) CHECK(v == 2.0);
  EdgeMap empty;
  empty.strength = RealImage(4, 6, 0.0);
  CHECK(std::isinf(mean_boundary_distance(empty, t, 0.3)));
}
