// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The monolct Authors

#pragma once

#include <span>
#include <utility>
#include <vector>

#include "monolct/grid.hpp"

namespace monolct {

/// Point x + iy of the open upper half plane.
class HalfPlanePoint {
 public:
  HalfPlanePoint(double x, double y);
  double x() const { return x_; }
  double y() const { return y_; }
  cdouble z() const { return {x_, y_}; }

 private:
  double x_, y_;
};

/// f + i H^{(a,b)} f together with the (a, b) that produced it.
struct GasSignal {
  SampledSignal1D base;
  double a = 0.0;
  double b = 1.0;
};

/// Parameter (a,b)-Hilbert transform e^{-iax^2/2b} H[e^{iat^2/2b} f](x), computed
/// with the spectral multiplier -i sgn(w). DC gets 0; the Nyquist bin of an
/// even length counts as a negative frequency, matching the LCT grid.
SampledSignal1D pht(const SampledSignal1D& f, double a, double b);

/// Direct principal-value sum (1/pi) sum_{t != x} g(t)/(x - t) dt of the chirped
/// signal, de-chirped. O(N^2); test oracle for pht.
SampledSignal1D pht_pv_oracle(const SampledSignal1D& f, double a, double b);

GasSignal gas(const SampledSignal1D& f, double a, double b);

/// GAS by one-sided filtering in the LCT domain: negative frequencies dropped,
/// positive doubled, DC kept, then inverted on f's grid.
GasSignal gas_spectral(const SampledSignal1D& f, const LctParams& p);

/// 2 int_0^inf K^{(d,-b,-c,a)}(z, w) F(w) dw at each point, trapezoid over the
/// LCT spectrum of f zero-padded to 4x its length. Throws std::domain_error
/// when more than 1e-6 of the spectral energy sits in the outer 10% of the
/// frequency grid.
std::vector<cdouble> gas_extend(const SampledSignal1D& f, const LctParams& p,
                                std::span<const HalfPlanePoint> pts);

struct PoissonPair {
  cdouble p;  // Poisson integral
  cdouble q;  // conjugate Poisson integral
};

/// Trapezoidal convolutions with P_y(x) = y/(pi (x^2+y^2)) and Q_y(x) = x/(pi (x^2+y^2)).
PoissonPair poisson_extend_1d(const SampledSignal1D& g, double x, double y);

/// e^{-ia z^2/2b} [P_y * g + i Q_y * g](x) with g = e^{iat^2/2b} f: the
/// convolution form of the upper-half-plane extension.
std::vector<cdouble> gas_extend_poisson(const SampledSignal1D& f, double a, double b,
                                        std::span<const HalfPlanePoint> pts);

/// Raised-cosine taper over the outer `fraction` of the samples on each end.
SampledSignal1D window_raised_cosine(const SampledSignal1D& f, double fraction = 0.1);

}  // namespace monolct
