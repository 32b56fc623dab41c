// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The monolct Authors

#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>

namespace monolct::fft {

using cdouble = std::complex<double>;

// Unnormalized in-place DFTs. forward uses e^{-2 pi i kj/N}, inverse e^{+2 pi i kj/N}.
void forward(std::span<cdouble> data);
void inverse(std::span<cdouble> data);
void forward_2d(std::span<cdouble> data, std::size_t rows, std::size_t cols);
void inverse_2d(std::span<cdouble> data, std::size_t rows, std::size_t cols);

/// Signed frequency index of DFT bin k for length n, in [-n/2, (n-1)/2].
/// The Nyquist bin of an even length maps to -n/2.
inline long signed_bin(std::size_t k, std::size_t n) {
  const long kk = static_cast<long>(k);
  const long nn = static_cast<long>(n);
  return (kk < (nn + 1) / 2) ? kk : kk - nn;
}

/// Runs body(i) for i in [0, count) on up to MONOLCT_THREADS workers.
/// Each index is visited exactly once; callers write disjoint outputs.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace monolct::fft
