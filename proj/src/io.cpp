// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The monolct Authors

#include "monolct/io.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "monolct/edge.hpp"

namespace monolct::io {

namespace {

std::string with_offset(const std::string& what, std::optional<std::size_t> off) {
  if (!off) return what;
  return what + " (byte offset " + std::to_string(*off) + ")";
}

// Header tokenizer for PNM: whitespace separated, '#' comments to end of line.
struct PnmCursor {
  const std::string& s;
  std::size_t pos = 0;

  void skip_space() {
    while (pos < s.size()) {
      if (s[pos] == '#') {
        while (pos < s.size() && s[pos] != '\n') ++pos;
      } else if (std::isspace(static_cast<unsigned char>(s[pos]))) {
        ++pos;
      } else {
        break;
      }
    }
  }

  unsigned long number(const char* what) {
    skip_space();
    const std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) {
      throw IoError(pos >= s.size() ? std::string("truncated PGM header: missing ") + what
                                    : std::string("malformed PGM header: expected ") + what,
                    start);
    }
    if (pos - start > 9) throw IoError(std::string("malformed PGM header: ") + what + " too large", start);
    return std::stoul(s.substr(start, pos - start));
  }
};

void put_u32(std::string& out, std::uint32_t v) {
  for (int k = 0; k < 4; ++k) out.push_back(static_cast<char>((v >> (8 * k)) & 0xFF));
}

void put_f64(std::string& out, double v) {
  const auto bits = std::bit_cast<std::uint64_t>(v);
  for (int k = 0; k < 8; ++k) out.push_back(static_cast<char>((bits >> (8 * k)) & 0xFF));
}

std::uint32_t get_u32(const std::string& s, std::size_t at) {
  std::uint32_t v = 0;
  for (int k = 3; k >= 0; --k) v = (v << 8) | static_cast<unsigned char>(s[at + k]);
  return v;
}

double get_f64(const std::string& s, std::size_t at) {
  std::uint64_t v = 0;
  for (int k = 7; k >= 0; --k) v = (v << 8) | static_cast<unsigned char>(s[at + k]);
  return std::bit_cast<double>(v);
}

std::string binary_header(std::uint32_t rows, std::uint32_t cols, std::uint32_t kind, double p, double q) {
  std::string out = "LCT1";
  put_u32(out, rows);
  put_u32(out, cols);
  put_u32(out, kind);
  put_f64(out, p);
  put_f64(out, q);
  return out;
}

LctParams complete_params(double a, double b, std::optional<double> c, std::optional<double> d) {
  if (c && d) return LctParams(a, b, *c, *d);
  if (c || d) throw InvalidParams("give both c and d, or neither");
  if (!(b > 0.0)) throw InvalidParams("default completion of (a, b) needs b > 0");
  return LctParams::complete(a, b);
}

}  // namespace

IoError::IoError(const std::string& what, std::optional<std::size_t> offset)
    : std::runtime_error(with_offset(what, offset)), offset_(offset) {}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("read failed: " + path);
  return ss.str();
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot create " + path);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("write failed: " + path);
}

RealImage parse_pgm(const std::string& bytes) {
  if (bytes.size() < 2) throw IoError("truncated PGM header: missing magic", bytes.size());
  if (bytes[0] != 'P' || (bytes[1] != '5' && bytes[1] != '2')) throw IoError("not a P5/P2 PGM file", 0);
  const bool binary = bytes[1] == '5';
  PnmCursor cur{bytes, 2};
  const auto width = cur.number("width");
  const auto height = cur.number("height");
  const std::size_t maxval_at = cur.pos;
  const auto maxval = cur.number("maxval");
  if (width == 0 || height == 0) throw IoError("PGM dimensions must be positive", maxval_at);
  if (maxval == 0 || maxval > 255) throw IoError("unsupported PGM maxval " + std::to_string(maxval), maxval_at);

  RealImage img(height, width);
  const double scale = static_cast<double>(maxval);
  if (binary) {
    if (cur.pos >= bytes.size() || !std::isspace(static_cast<unsigned char>(bytes[cur.pos]))) {
      throw IoError("truncated PGM header: missing separator after maxval", cur.pos);
    }
    const std::size_t start = cur.pos + 1;
    const std::size_t need = img.data.size();
    if (bytes.size() < start + need) {
      throw IoError("truncated PGM raster: expected " + std::to_string(need) + " bytes", bytes.size());
    }
    for (std::size_t k = 0; k < need; ++k) {
      const auto v = static_cast<unsigned char>(bytes[start + k]);
      if (v > maxval) throw IoError("PGM sample exceeds maxval", start + k);
      img.data[k] = v / scale;
    }
  } else {
    for (auto& v : img.data) {
      const std::size_t at = cur.pos;
      const auto raw = cur.number("sample");
      if (raw > maxval) throw IoError("PGM sample exceeds maxval", at);
      v = static_cast<double>(raw) / scale;
    }
  }
  return img;
}

RealImage read_pgm(const std::string& path) { return parse_pgm(read_file(path)); }

std::string encode_pgm(const RealImage& img) {
  std::string out = "P5\n" + std::to_string(img.cols) + " " + std::to_string(img.rows) + "\n255\n";
  out.reserve(out.size() + img.data.size());
  for (double v : img.data) {
    double q = std::floor(v * 255.0 + 0.5);
    if (!(q >= 0.0)) q = 0.0;  // NaN too
    out.push_back(static_cast<char>(static_cast<unsigned char>(std::min(q, 255.0))));
  }
  return out;
}

void write_pgm(const std::string& path, const RealImage& img) { write_file(path, encode_pgm(img)); }

SampledSignal1D parse_signal_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<double> xs;
  std::vector<cdouble> vals;
  std::size_t offset = 0;
  bool first = true;
  while (std::getline(in, line)) {
    const std::size_t here = offset;
    offset += line.size() + 1;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    double x = 0.0, re = 0.0, im = 0.0;
    char tail = 0;
    const int got = std::sscanf(line.c_str(), " %lf , %lf , %lf %c", &x, &re, &im, &tail);
    if (got == 2 || got == 3) {
      if (got == 2) im = 0.0;
      xs.push_back(x);
      vals.emplace_back(re, im);
    } else if (first && got == 0) {
      // header line
    } else {
      throw IoError("malformed CSV line", here);
    }
    first = false;
  }
  if (xs.size() < 2) throw IoError("CSV signal needs at least 2 samples");
  const double dx = xs[1] - xs[0];
  if (!(dx > 0.0)) throw IoError("CSV x column must increase");
  for (std::size_t j = 2; j < xs.size(); ++j) {
    if (std::abs((xs[j] - xs[j - 1]) - dx) > 1e-9 * std::max(1.0, std::abs(dx))) {
      throw IoError("CSV x column is not uniformly spaced");
    }
  }
  return SampledSignal1D(std::move(vals), xs.front(), dx);
}

SampledSignal1D read_signal_csv(const std::string& path) { return parse_signal_csv(read_file(path)); }

std::string encode_signal_csv(const SampledSignal1D& s) {
  std::string out = "x,re,im\n";
  char buf[96];
  for (std::size_t j = 0; j < s.size(); ++j) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", s.coord(j), s.samples[j].real(), s.samples[j].imag());
    out += buf;
  }
  return out;
}

void write_signal_csv(const std::string& path, const SampledSignal1D& s) { write_file(path, encode_signal_csv(s)); }

std::vector<std::pair<double, double>> parse_points_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::pair<double, double>> pts;
  std::size_t offset = 0;
  bool first = true;
  while (std::getline(in, line)) {
    const std::size_t here = offset;
    offset += line.size() + 1;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    double x = 0.0, y = 0.0;
    char tail = 0;
    const int got = std::sscanf(line.c_str(), " %lf , %lf %c", &x, &y, &tail);
    if (got == 2) {
      pts.emplace_back(x, y);
    } else if (!(first && got == 0)) {
      throw IoError("malformed point line", here);
    }
    first = false;
  }
  if (pts.empty()) throw IoError("point list is empty");
  return pts;
}

std::string encode_extension_csv(const std::vector<std::pair<double, double>>& pts,
                                 const std::vector<cdouble>& values) {
  std::string out = "x,y,re,im\n";
  char buf[128];
  for (std::size_t k = 0; k < pts.size(); ++k) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", pts[k].first, pts[k].second, values[k].real(),
                  values[k].imag());
    out += buf;
  }
  return out;
}

std::string encode_binary(const SampledSignal1D& s) {
  std::string out = binary_header(1, static_cast<std::uint32_t>(s.size()), 1, s.dx, s.x_min);
  for (const auto& v : s.samples) {
    put_f64(out, v.real());
    put_f64(out, v.imag());
  }
  return out;
}

std::string encode_binary(const Field2D& f) {
  std::string out = binary_header(static_cast<std::uint32_t>(f.rows), static_cast<std::uint32_t>(f.cols), 2, f.dx, f.dy);
  for (const auto& v : f.data) {
    put_f64(out, v.real());
    put_f64(out, v.imag());
  }
  return out;
}

BinaryPayload parse_binary(const std::string& bytes) {
  constexpr std::size_t kHeader = 32;
  if (bytes.size() < kHeader) throw IoError("truncated binary header", bytes.size());
  if (bytes.compare(0, 4, "LCT1") != 0) throw IoError("bad binary magic", 0);
  const std::size_t rows = get_u32(bytes, 4);
  const std::size_t cols = get_u32(bytes, 8);
  const std::uint32_t kind = get_u32(bytes, 12);
  const double p = get_f64(bytes, 16);
  const double q = get_f64(bytes, 24);
  const std::size_t count = rows * cols;
  if (bytes.size() != kHeader + 16 * count) throw IoError("binary payload size mismatch", bytes.size());
  std::vector<cdouble> vals(count);
  for (std::size_t k = 0; k < count; ++k) {
    vals[k] = {get_f64(bytes, kHeader + 16 * k), get_f64(bytes, kHeader + 16 * k + 8)};
  }
  try {
    if (kind == 1) {
      if (rows != 1) throw IoError("1D binary signal must have one row", 4);
      return SampledSignal1D(std::move(vals), q, p);
    }
    if (kind == 2) {
      Field2D f(rows, cols, p, q);
      f.data = std::move(vals);
      return f;
    }
  } catch (const std::invalid_argument& e) {
    throw IoError(std::string("invalid binary payload: ") + e.what(), 16);
  }
  throw IoError("unknown binary kind " + std::to_string(kind), 12);
}

BinaryPayload read_binary(const std::string& path) { return parse_binary(read_file(path)); }

LctParams parse_params_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidParams(std::string("params JSON: ") + e.what());
  }
  auto num = [&](const char* key) -> std::optional<double> {
    if (!j.contains(key)) return std::nullopt;
    if (!j[key].is_number()) throw InvalidParams(std::string("params JSON: ") + key + " must be a number");
    return j[key].get<double>();
  };
  const auto a = num("a");
  const auto b = num("b");
  if (!a || !b) throw InvalidParams("params JSON needs a and b");
  return complete_params(*a, *b, num("c"), num("d"));
}

LctParams parse_params_list(const std::string& text) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double x = 0.0;
    try {
      x = std::stod(item, &used);
    } catch (const std::exception&) {
      throw InvalidParams("params must be numbers: " + text);
    }
    if (item.find_first_not_of(" \t", used) != std::string::npos) throw InvalidParams("params must be numbers: " + text);
    v.push_back(x);
  }
  if (v.size() == 2) return complete_params(v[0], v[1], std::nullopt, std::nullopt);
  if (v.size() == 4) return LctParams(v[0], v[1], v[2], v[3]);
  throw InvalidParams("params take the form a,b or a,b,c,d");
}

void write_monogenic(const std::string& prefix, const MonogenicField& m) {
  write_file(prefix + "_f0.bin", encode_binary(m.f0));
  for (std::size_t j = 0; j < m.fj.size(); ++j) {
    write_file(prefix + "_e" + std::to_string(j + 1) + ".bin", encode_binary(m.fj[j]));
  }
  nlohmann::json side;
  side["a"] = round12(m.a);
  side["b"] = round12(m.b);
  side["x0"] = round12(m.x0);
  side["n"] = m.n;
  side["H"] = m.rows();
  side["W"] = m.cols();
  side["boundary"] = to_string(m.boundary);
  write_file(prefix + ".json", side.dump(2) + "\n");
}

RealImage modulus_image(const Field2D& f, double percentile) {
  RealImage mod(f.rows, f.cols);
  for (std::size_t k = 0; k < f.data.size(); ++k) mod.data[k] = std::abs(f.data[k]);
  return percentile_normalize(mod, percentile);
}

double round12(double v) {
  if (!std::isfinite(v)) return v;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;  // drop -0
}

}  // namespace monolct::io
