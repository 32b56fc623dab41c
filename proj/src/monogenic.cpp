// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The monolct Authors

#include "monolct/monogenic.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "monolct/fft.hpp"

namespace monolct {

namespace {

constexpr double kPi = std::numbers::pi;
const cdouble kI(0.0, 1.0);
constexpr std::size_t kOracleMax = 64;

void require_b(double b) {
  if (!(b > 0.0)) throw InvalidParams("parameter b must be > 0");
}

std::size_t reflect_index(long k, std::size_t n) {
  const long nn = static_cast<long>(n);
  // Half-sample symmetric extension with period 2n.
  long m = k % (2 * nn);
  if (m < 0) m += 2 * nn;
  return static_cast<std::size_t>(m < nn ? m : 2 * nn - 1 - m);
}

// Channels of the chirp-free extension S(x0) = F^{-1}[e^{-x0|u|} (1 + i u/|u|) G]
// (or its x0-derivative), evaluated on f's grid.
struct Spectral {
  Field2D s0;
  std::array<Field2D, 2> sv;
};

Spectral spectral_channels(const Field2D& f, double a, double b, double x0, bool derivative, Boundary boundary) {
  require_b(b);
  const std::size_t h = f.rows;
  const std::size_t w = f.cols;
  std::size_t ph = 0, pw = 0;
  if (boundary == Boundary::Reflect) {
    ph = h / 2;
    pw = w / 2;
  } else if (boundary == Boundary::Zero) {
    ph = 3 * h / 2;
    pw = 3 * w / 2;
  }
  const std::size_t hp = h + 2 * ph;
  const std::size_t wp = w + 2 * pw;

  std::vector<cdouble> g(hp * wp);
  for (std::size_t i = 0; i < hp; ++i) {
    const long oi = static_cast<long>(i) - static_cast<long>(ph);
    const double y = (static_cast<double>(oi) - static_cast<double>(h / 2)) * f.dy;
    const std::size_t si = reflect_index(oi, h);
    const bool row_in = oi >= 0 && oi < static_cast<long>(h);
    for (std::size_t j = 0; j < wp; ++j) {
      const long oj = static_cast<long>(j) - static_cast<long>(pw);
      if (boundary == Boundary::Zero && !(row_in && oj >= 0 && oj < static_cast<long>(w))) continue;
      const double x = (static_cast<double>(oj) - static_cast<double>(w / 2)) * f.dx;
      const std::size_t sj = reflect_index(oj, w);
      g[i * wp + j] = std::polar(1.0, a * (x * x + y * y) / (2.0 * b)) * f.at(si, sj);
    }
  }
  fft::forward_2d(g, hp, wp);

  std::vector<cdouble> c0(hp * wp), c1(hp * wp), c2(hp * wp);
  const double inv_n = 1.0 / static_cast<double>(hp * wp);
  const bool nyq_x = wp % 2 == 0;
  const bool nyq_y = hp % 2 == 0;
  for (std::size_t i = 0; i < hp; ++i) {
    const long ki = fft::signed_bin(i, hp);
    const double u2 = 2.0 * kPi * static_cast<double>(ki) / (static_cast<double>(hp) * f.dy);
    for (std::size_t j = 0; j < wp; ++j) {
      const long kj = fft::signed_bin(j, wp);
      const double u1 = 2.0 * kPi * static_cast<double>(kj) / (static_cast<double>(wp) * f.dx);
      const double r = std::hypot(u1, u2);
      double weight = std::exp(-x0 * r) * inv_n;
      if (derivative) weight *= -r;
      const cdouble v = g[i * wp + j] * weight;
      c0[i * wp + j] = v;
      if (r > 0.0) {
        const bool x_nyq = nyq_x && kj == -static_cast<long>(wp / 2);
        const bool y_nyq = nyq_y && ki == -static_cast<long>(hp / 2);
        c1[i * wp + j] = x_nyq ? 0.0 : kI * (u1 / r) * v;
        c2[i * wp + j] = y_nyq ? 0.0 : kI * (u2 / r) * v;
      }
    }
  }
  fft::inverse_2d(c0, hp, wp);
  fft::inverse_2d(c1, hp, wp);
  fft::inverse_2d(c2, hp, wp);

  Spectral out{Field2D(h, w, f.dx, f.dy), {Field2D(h, w, f.dx, f.dy), Field2D(h, w, f.dx, f.dy)}};
  for (std::size_t i = 0; i < h; ++i) {
    for (std::size_t j = 0; j < w; ++j) {
      const std::size_t k = (i + ph) * wp + (j + pw);
      out.s0.at(i, j) = c0[k];
      out.sv[0].at(i, j) = c1[k];
      out.sv[1].at(i, j) = c2[k];
    }
  }
  return out;
}

// e^{s i a (x0^2 + |x|^2) / 2b} on the grid.
std::vector<cdouble> chirp_table(const Field2D& f, double a, double b, double x0, double s) {
  std::vector<cdouble> t(f.size());
  for (std::size_t i = 0; i < f.rows; ++i) {
    const double y = f.x2(i);
    for (std::size_t j = 0; j < f.cols; ++j) {
      const double x = f.x1(j);
      t[i * f.cols + j] = std::polar(1.0, s * a * (x0 * x0 + x * x + y * y) / (2.0 * b));
    }
  }
  return t;
}

MonogenicField assemble(const Field2D& f, double a, double b, double x0, Boundary boundary,
                        const Spectral& s) {
  MonogenicField out;
  out.n = 2;
  out.a = a;
  out.b = b;
  out.x0 = x0;
  out.boundary = boundary;
  out.source = std::make_shared<const Field2D>(f);
  const auto dechirp = chirp_table(f, a, b, x0, -1.0);
  out.f0 = s.s0;
  out.fj = {s.sv[0], s.sv[1]};
  for (std::size_t k = 0; k < f.size(); ++k) {
    out.f0.data[k] *= dechirp[k];
    out.fj[0].data[k] *= dechirp[k];
    out.fj[1].data[k] *= dechirp[k];
  }
  return out;
}

void check_oracle_size(const Field2D& f) {
  if (f.rows > kOracleMax || f.cols > kOracleMax) {
    throw std::invalid_argument("spatial oracle is limited to 64x64 grids");
  }
}

}  // namespace

const char* to_string(Boundary b) {
  switch (b) {
    case Boundary::Periodic: return "periodic";
    case Boundary::Reflect: return "reflect";
    case Boundary::Zero: return "zero";
  }
  return "?";
}

Boundary parse_boundary(const std::string& s) {
  if (s == "periodic") return Boundary::Periodic;
  if (s == "reflect") return Boundary::Reflect;
  if (s == "zero") return Boundary::Zero;
  throw std::invalid_argument("boundary must be periodic, reflect or zero");
}

Paravector MonogenicField::at(std::size_t i, std::size_t j) const {
  std::vector<cdouble> v(fj.size());
  for (std::size_t k = 0; k < fj.size(); ++k) v[k] = fj[k].at(i, j);
  return Paravector(f0.at(i, j), std::move(v));
}

Field2D riesz_spectral(const Field2D& f, double a, double b, int j) {
  if (j != 1 && j != 2) throw std::invalid_argument("Riesz axis must be 1 or 2");
  const auto s = spectral_channels(f, a, b, 0.0, false, Boundary::Periodic);
  // The e_j channel carries +i u_j/|u|; the Riesz multiplier is its negative.
  Field2D out = s.sv[static_cast<std::size_t>(j - 1)];
  const auto dechirp = chirp_table(f, a, b, 0.0, -1.0);
  for (std::size_t k = 0; k < out.size(); ++k) out.data[k] *= -dechirp[k];
  return out;
}

Field2D riesz_spatial_oracle(const Field2D& f, double a, double b, int j) {
  require_b(b);
  if (j != 1 && j != 2) throw std::invalid_argument("Riesz axis must be 1 or 2");
  check_oracle_size(f);
  const auto chirp = chirp_table(f, a, b, 0.0, 1.0);
  std::vector<cdouble> g(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) g[k] = chirp[k] * f.data[k];

  // Gamma(3/2) / pi^{3/2} = 1/(2 pi).
  const double c = 1.0 / (2.0 * kPi);
  Field2D out(f.rows, f.cols, f.dx, f.dy);
  fft::parallel_for(f.rows, [&](std::size_t i) {
    for (std::size_t jj = 0; jj < f.cols; ++jj) {
      cdouble acc{};
      for (std::size_t ti = 0; ti < f.rows; ++ti) {
        const double d2 = (static_cast<double>(i) - static_cast<double>(ti)) * f.dy;
        for (std::size_t tj = 0; tj < f.cols; ++tj) {
          if (ti == i && tj == jj) continue;
          const double d1 = (static_cast<double>(jj) - static_cast<double>(tj)) * f.dx;
          const double r2 = d1 * d1 + d2 * d2;
          const double num = (j == 1) ? d1 : d2;
          acc += (num / (r2 * std::sqrt(r2))) * g[ti * f.cols + tj];
        }
      }
      // Singular cell: with g ~ g(x) + grad g . s the p.v. over the cell is
      // -dg/dx_j * int s_j^2/|s|^3 = -dg/dx_j * 4 q asinh(p/q),
      // p, q the half-widths along and across axis j.
      const std::size_t ip = std::min(i + 1, f.rows - 1), im = i == 0 ? 0 : i - 1;
      const std::size_t jp = std::min(jj + 1, f.cols - 1), jm = jj == 0 ? 0 : jj - 1;
      const cdouble grad = (j == 1) ? (g[i * f.cols + jp] - g[i * f.cols + jm]) / (static_cast<double>(jp - jm) * f.dx)
                                    : (g[ip * f.cols + jj] - g[im * f.cols + jj]) / (static_cast<double>(ip - im) * f.dy);
      const double hp = 0.5 * (j == 1 ? f.dx : f.dy);
      const double hq = 0.5 * (j == 1 ? f.dy : f.dx);
      const cdouble self = -grad * 4.0 * hq * std::asinh(hp / hq);
      out.at(i, jj) = c * (acc * f.dx * f.dy + self) * std::conj(chirp[i * f.cols + jj]);
    }
  });
  return out;
}

MonogenicField monogenic_signal(const Field2D& f, double a, double b, Boundary boundary) {
  const auto s = spectral_channels(f, a, b, 0.0, false, boundary);
  return assemble(f, a, b, 0.0, boundary, s);
}

MonogenicField monogenic_extend(const Field2D& f, const LctParams& p, double x0, Boundary boundary) {
  p.require_positive_b();
  return monogenic_extend(f, p.a(), p.b(), x0, boundary);
}

MonogenicField monogenic_extend(const Field2D& f, double a, double b, double x0, Boundary boundary) {
  if (!(x0 > 0.0)) throw std::invalid_argument("monogenic_extend needs x0 > 0; use monogenic_signal at the boundary");
  const auto s = spectral_channels(f, a, b, x0, false, boundary);
  return assemble(f, a, b, x0, boundary, s);
}

MonogenicField monogenic_extend_quadrature(const Field2D& f, double a, double b, double x0) {
  require_b(b);
  if (!(x0 > 0.0)) throw std::invalid_argument("quadrature extension needs x0 > 0");
  check_oracle_size(f);
  const auto chirp = chirp_table(f, a, b, 0.0, 1.0);
  std::vector<cdouble> g(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) g[k] = chirp[k] * f.data[k];

  const double c = 1.0 / (2.0 * kPi);
  Spectral s{Field2D(f.rows, f.cols, f.dx, f.dy),
             {Field2D(f.rows, f.cols, f.dx, f.dy), Field2D(f.rows, f.cols, f.dx, f.dy)}};
  fft::parallel_for(f.rows, [&](std::size_t i) {
    for (std::size_t jj = 0; jj < f.cols; ++jj) {
      cdouble p{}, q1{}, q2{};
      for (std::size_t ti = 0; ti < f.rows; ++ti) {
        const double d2 = (static_cast<double>(i) - static_cast<double>(ti)) * f.dy;
        for (std::size_t tj = 0; tj < f.cols; ++tj) {
          const double d1 = (static_cast<double>(jj) - static_cast<double>(tj)) * f.dx;
          const double r2 = x0 * x0 + d1 * d1 + d2 * d2;
          const double k3 = 1.0 / (r2 * std::sqrt(r2));
          const cdouble gv = g[ti * f.cols + tj];
          p += x0 * k3 * gv;
          // Conjugate kernel conj(x)/|x0 + x|^3 has vector part -x.
          q1 -= d1 * k3 * gv;
          q2 -= d2 * k3 * gv;
        }
      }
      const double da = c * f.dx * f.dy;
      s.s0.at(i, jj) = p * da;
      s.sv[0].at(i, jj) = q1 * da;
      s.sv[1].at(i, jj) = q2 * da;
    }
  });
  auto out = assemble(f, a, b, x0, Boundary::Periodic, s);
  return out;
}

MonogenicField ddx0(const MonogenicField& field) {
  if (!field.source) throw std::invalid_argument("ddx0 needs the generating field");
  const Field2D& f = *field.source;
  const double a = field.a;
  const double b = field.b;
  const double x0 = field.x0;
  auto s = spectral_channels(f, a, b, x0, false, field.boundary);
  const auto ds = spectral_channels(f, a, b, x0, true, field.boundary);
  // f_M = e^{-ia(x0^2+|x|^2)/2b} S  =>  d/dx0 f_M = e^{...} (S' - i a x0/b S).
  const cdouble k = -kI * a * x0 / b;
  for (std::size_t i = 0; i < f.size(); ++i) {
    s.s0.data[i] = ds.s0.data[i] + k * s.s0.data[i];
    s.sv[0].data[i] = ds.sv[0].data[i] + k * s.sv[0].data[i];
    s.sv[1].data[i] = ds.sv[1].data[i] + k * s.sv[1].data[i];
  }
  return assemble(f, a, b, x0, field.boundary, s);
}

double monogenicity_residual(const MonogenicField& field, bool chirp_compensated) {
  const std::size_t h = field.rows();
  const std::size_t w = field.cols();
  if (h < 3 || w < 3) return 0.0;
  const auto dfield = ddx0(field);
  const Field2D& f = field.f0;
  std::vector<cdouble> chirp(f.size(), 1.0);
  if (chirp_compensated) chirp = chirp_table(f, field.a, field.b, field.x0, 1.0);
  const cdouble dchirp = chirp_compensated ? kI * field.a * field.x0 / field.b : 0.0;

  const int n = field.n;
  auto h_at = [&](std::size_t i, std::size_t j) {
    const std::size_t k = i * w + j;
    CliffordNum v = field.at(i, j).to_clifford();
    return v * chirp[k];
  };
  // d/dx0 of h: chirp' h + chirp f_M'.
  auto dh0_at = [&](std::size_t i, std::size_t j) {
    const std::size_t k = i * w + j;
    CliffordNum v = dfield.at(i, j).to_clifford() * chirp[k];
    v += field.at(i, j).to_clifford() * (dchirp * chirp[k]);
    return v;
  };

  double num = 0.0;
  double den = 0.0;
  const auto e1 = CliffordNum::basis_vector(n, 1);
  const auto e2 = CliffordNum::basis_vector(n, 2);
  for (std::size_t i = 1; i + 1 < h; ++i) {
    for (std::size_t j = 1; j + 1 < w; ++j) {
      const CliffordNum d0 = dh0_at(i, j);
      const CliffordNum d1 = (h_at(i, j + 1) - h_at(i, j - 1)) * (1.0 / (2.0 * f.dx));
      const CliffordNum d2 = (h_at(i + 1, j) - h_at(i - 1, j)) * (1.0 / (2.0 * f.dy));
      const CliffordNum dirac = d0 + e1 * d1 + e2 * d2;
      num += dirac.norm() * dirac.norm();
      den += d0.norm() * d0.norm() + d1.norm() * d1.norm() + d2.norm() * d2.norm();
    }
  }
  if (den == 0.0) return 0.0;
  return std::sqrt(num / den);
}

Field2D window_raised_cosine(const Field2D& f, double fraction) {
  auto taper = [fraction](std::size_t n) {
    std::vector<double> t(n, 1.0);
    const auto m = static_cast<std::size_t>(std::round(fraction * static_cast<double>(n)));
    for (std::size_t k = 0; k < m; ++k) {
      const double v = 0.5 * (1.0 - std::cos(kPi * static_cast<double>(k) / static_cast<double>(m)));
      t[k] = v;
      t[n - 1 - k] = v;
    }
    return t;
  };
  const auto ty = taper(f.rows);
  const auto tx = taper(f.cols);
  Field2D out = f;
  for (std::size_t i = 0; i < f.rows; ++i) {
    for (std::size_t j = 0; j < f.cols; ++j) out.at(i, j) *= ty[i] * tx[j];
  }
  return out;
}

}  // namespace monolct
