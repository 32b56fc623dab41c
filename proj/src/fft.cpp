// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The monolct Authors

#include "monolct/fft.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace monolct::fft {

namespace {

// FFTW planning is not re-entrant; execution of a finished plan is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

void run(std::span<cdouble> data, int rank, const int* dims, int sign) {
  if (data.empty()) return;
  auto* buf = reinterpret_cast<fftw_complex*>(data.data());
  fftw_plan plan;
  {
    std::lock_guard lock(planner_mutex());
    plan = fftw_plan_dft(rank, dims, buf, buf, sign, FFTW_ESTIMATE);
  }
  if (plan == nullptr) throw std::runtime_error("fftw planning failed");
  fftw_execute(plan);
  std::lock_guard lock(planner_mutex());
  fftw_destroy_plan(plan);
}

std::size_t thread_cap() {
  std::size_t cap = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("MONOLCT_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1) cap = static_cast<std::size_t>(v);
    } catch (const std::exception&) {
      // ignore malformed values
    }
  }
  return cap;
}

}  // namespace

void forward(std::span<cdouble> data) {
  const int n = static_cast<int>(data.size());
  run(data, 1, &n, FFTW_FORWARD);
}

void inverse(std::span<cdouble> data) {
  const int n = static_cast<int>(data.size());
  run(data, 1, &n, FFTW_BACKWARD);
}

void forward_2d(std::span<cdouble> data, std::size_t rows, std::size_t cols) {
  if (data.size() != rows * cols) throw std::invalid_argument("fft: size mismatch");
  const int dims[2] = {static_cast<int>(rows), static_cast<int>(cols)};
  run(data, 2, dims, FFTW_FORWARD);
}

void inverse_2d(std::span<cdouble> data, std::size_t rows, std::size_t cols) {
  if (data.size() != rows * cols) throw std::invalid_argument("fft: size mismatch");
  const int dims[2] = {static_cast<int>(rows), static_cast<int>(cols)};
  run(data, 2, dims, FFTW_BACKWARD);
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
  const std::size_t workers = std::min(thread_cap(), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  // Static contiguous chunks: the index-to-worker map never affects results.
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  const std::size_t chunk = (count + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t lo = w * chunk;
    const std::size_t hi = std::min(count, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &body] {
      for (std::size_t i = lo; i < hi; ++i) body(i);
    });
  }
}

}  // namespace monolct::fft
