// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The monolct Authors

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "monolct/grid.hpp"
#include "monolct/monogenic.hpp"

namespace monolct::io {

/// File or format error; `offset` is the byte position of a format problem.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what, std::optional<std::size_t> offset = std::nullopt);
  std::optional<std::size_t> offset() const { return offset_; }

 private:
  std::optional<std::size_t> offset_;
};

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& bytes);

/// P5 or P2, maxval 1..255, values mapped to [0, 1].
RealImage parse_pgm(const std::string& bytes);
RealImage read_pgm(const std::string& path);
/// Binary P5, maxval 255, round-half-up of v * 255 clamped to [0, 255].
std::string encode_pgm(const RealImage& img);
void write_pgm(const std::string& path, const RealImage& img);

/// Lines "x,re,im" (an optional non-numeric header line is skipped).
/// The grid must be uniform.
SampledSignal1D parse_signal_csv(const std::string& text);
SampledSignal1D read_signal_csv(const std::string& path);
std::string encode_signal_csv(const SampledSignal1D& s);
void write_signal_csv(const std::string& path, const SampledSignal1D& s);

/// Lines "x,y" of upper-half-plane points (optional header line).
std::vector<std::pair<double, double>> parse_points_csv(const std::string& text);
/// Lines "x,y,re,im" with a header.
std::string encode_extension_csv(const std::vector<std::pair<double, double>>& pts,
                                 const std::vector<cdouble>& values);

/// Little-endian container: "LCT1", u32 rows, u32 cols, u32 kind
/// (1 = 1D signal, 2 = 2D field), f64 pair (dx, x_min) or (dx, dy),
/// then rows * cols (re, im) f64 pairs.
using BinaryPayload = std::variant<SampledSignal1D, Field2D>;
std::string encode_binary(const SampledSignal1D& s);
std::string encode_binary(const Field2D& f);
BinaryPayload parse_binary(const std::string& bytes);
BinaryPayload read_binary(const std::string& path);

/// {"a":..,"b":..,"c":..,"d":..}; c and d may be omitted (d = 1, c = (ad - 1)/b).
LctParams parse_params_json(const std::string& text);

/// "a,b[,c,d]" with the same completion.
LctParams parse_params_list(const std::string& text);

/// Writes <prefix>_f0.bin, <prefix>_e1.bin ... and a <prefix>.json sidecar.
void write_monogenic(const std::string& prefix, const MonogenicField& m);

/// Modulus divided by its given percentile and clamped to [0, 1].
RealImage modulus_image(const Field2D& f, double percentile = 99.0);

/// Value rounded to 12 significant digits, so JSON output is stable.
double round12(double v);

}  // namespace monolct::io
