// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The monolct Authors

#include "monolct/clifford.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace monolct {

namespace {

void check_dim(int n) {
  if (n < 1 || n > CliffordNum::kMaxDim) {
    throw std::invalid_argument("Clifford dimension must be in 1..3, got " + std::to_string(n));
  }
}

// Basis masks in grade-then-lexicographic order, one table per n.
struct BasisTable {
  std::array<std::vector<unsigned>, CliffordNum::kMaxDim + 1> masks;
  std::array<std::vector<std::size_t>, CliffordNum::kMaxDim + 1> index;

  BasisTable() {
    for (int n = 1; n <= CliffordNum::kMaxDim; ++n) {
      auto& m = masks[static_cast<std::size_t>(n)];
      for (unsigned k = 0; k < (1u << n); ++k) m.push_back(k);
      std::sort(m.begin(), m.end(), [](unsigned x, unsigned y) {
        const int gx = std::popcount(x);
        const int gy = std::popcount(y);
        if (gx != gy) return gx < gy;
        // Lexicographic on the ascending generator list: the lowest differing
        // generator decides.
        const unsigned diff = x ^ y;
        const unsigned low = diff & (~diff + 1);
        return (x & low) != 0;
      });
      auto& inv = index[static_cast<std::size_t>(n)];
      inv.assign(m.size(), 0);
      for (std::size_t k = 0; k < m.size(); ++k) inv[m[k]] = k;
    }
  }
};

const BasisTable& basis() {
  static const BasisTable table;
  return table;
}

// Sign of e_A e_B after reordering into ascending order and contracting
// e_i e_i = -1.
double blade_sign(unsigned a, unsigned b) {
  int swaps = 0;
  for (unsigned rest = a >> 1; rest != 0; rest >>= 1) swaps += std::popcount(rest & b);
  swaps += std::popcount(a & b);
  return (swaps % 2 == 0) ? 1.0 : -1.0;
}

}  // namespace

CliffordNum::CliffordNum(int n) : n_(n) {
  check_dim(n);
  coeffs_.assign(std::size_t{1} << n, cdouble{});
}

CliffordNum::CliffordNum(int n, std::vector<cdouble> coeffs) : n_(n), coeffs_(std::move(coeffs)) {
  check_dim(n);
  if (coeffs_.size() != (std::size_t{1} << n)) {
    throw std::invalid_argument("Clifford coefficient count must be 2^n");
  }
}

CliffordNum CliffordNum::scalar(int n, cdouble s) {
  CliffordNum x(n);
  x.coeffs_[0] = s;
  return x;
}

CliffordNum CliffordNum::basis_vector(int n, int j) {
  if (j < 1 || j > n) throw std::invalid_argument("basis vector index out of range");
  CliffordNum x(n);
  x.coeffs_[index_of_mask(n, 1u << (j - 1))] = 1.0;
  return x;
}

int CliffordNum::grade_of(int n, std::size_t k) { return std::popcount(blade_mask(n, k)); }

unsigned CliffordNum::blade_mask(int n, std::size_t k) {
  check_dim(n);
  return basis().masks[static_cast<std::size_t>(n)].at(k);
}

std::size_t CliffordNum::index_of_mask(int n, unsigned mask) {
  check_dim(n);
  return basis().index[static_cast<std::size_t>(n)].at(mask);
}

std::string CliffordNum::basis_name(int n, std::size_t k) {
  const unsigned m = blade_mask(n, k);
  if (m == 0) return "e0";
  std::string s = "e";
  for (int j = 0; j < n; ++j) {
    if (m & (1u << j)) s += static_cast<char>('1' + j);
  }
  return s;
}

CliffordNum CliffordNum::grade(int g) const {
  CliffordNum out(n_);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (grade_of(n_, k) == g) out.coeffs_[k] = coeffs_[k];
  }
  return out;
}

std::vector<cdouble> CliffordNum::vector_part() const {
  std::vector<cdouble> v(static_cast<std::size_t>(n_));
  for (int j = 1; j <= n_; ++j) v[static_cast<std::size_t>(j - 1)] = coeffs_[index_of_mask(n_, 1u << (j - 1))];
  return v;
}

double CliffordNum::norm() const {
  double s = 0.0;
  for (const auto& c : coeffs_) s += std::norm(c);
  return std::sqrt(s);
}

CliffordNum& CliffordNum::operator+=(const CliffordNum& o) {
  if (o.n_ != n_) throw std::invalid_argument("Clifford dimension mismatch");
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

CliffordNum& CliffordNum::operator-=(const CliffordNum& o) {
  if (o.n_ != n_) throw std::invalid_argument("Clifford dimension mismatch");
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

CliffordNum& CliffordNum::operator*=(cdouble s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

CliffordNum operator*(const CliffordNum& x, const CliffordNum& y) { return geometric_product(x, y); }

CliffordNum geometric_product(const CliffordNum& x, const CliffordNum& y) {
  if (x.dim() != y.dim()) throw std::invalid_argument("Clifford dimension mismatch");
  const int n = x.dim();
  const auto& masks = basis().masks[static_cast<std::size_t>(n)];
  const auto& index = basis().index[static_cast<std::size_t>(n)];
  CliffordNum out(n);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == cdouble{}) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (y[j] == cdouble{}) continue;
      const unsigned a = masks[i];
      const unsigned b = masks[j];
      out[index[a ^ b]] += blade_sign(a, b) * x[i] * y[j];
    }
  }
  return out;
}

GradeParts grade_parts(const CliffordNum& x) {
  GradeParts parts{x.scalar_part(), x.vector_part(), CliffordNum(x.dim())};
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (CliffordNum::grade_of(x.dim(), k) >= 2) parts.rest[k] = x[k];
  }
  return parts;
}

std::string to_string(const CliffordNum& x) {
  std::string out;
  char buf[96];
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (k > 0) out += " + ";
    std::snprintf(buf, sizeof buf, "(%.17g%+.17gi)*", x[k].real(), x[k].imag());
    out += buf;
    out += CliffordNum::basis_name(x.dim(), k);
  }
  return out;
}

Paravector Paravector::from_clifford(const CliffordNum& x, double tol) {
  const auto parts = grade_parts(x);
  for (const auto& c : parts.rest.coeffs()) {
    if (std::abs(c) > tol) throw std::invalid_argument("Clifford number has grade >= 2 content");
  }
  return Paravector(parts.scalar, parts.vector);
}

Paravector Paravector::conj() const {
  std::vector<cdouble> v(v_.size());
  std::transform(v_.begin(), v_.end(), v.begin(), [](cdouble c) { return -c; });
  return Paravector(s_, std::move(v));
}

CliffordNum Paravector::to_clifford() const {
  CliffordNum x = CliffordNum::scalar(dim(), s_);
  for (int j = 1; j <= dim(); ++j) x[CliffordNum::index_of_mask(dim(), 1u << (j - 1))] = v_[static_cast<std::size_t>(j - 1)];
  return x;
}

cdouble complex_sqrt(cdouble z) {
  if (z == cdouble{}) return {};
  // std::arg returns -pi for (negative real, -0.0 imaginary); the convention
  // is arg in (-pi, pi].
  double arg = std::arg(z);
  if (arg <= -std::numbers::pi) arg = std::numbers::pi;
  return std::polar(std::sqrt(std::abs(z)), arg / 2.0);
}

cdouble complex_ln(cdouble z) {
  double arg = std::arg(z);
  if (arg <= -std::numbers::pi) arg = std::numbers::pi;
  return {std::log(std::abs(z)), arg};
}

cdouble complex_arctan(cdouble z) {
  const cdouble i(0.0, 1.0);
  const cdouble num = 1.0 + i * z;
  const cdouble den = 1.0 - i * z;
  if (num == cdouble{} || den == cdouble{}) throw std::domain_error("complex_arctan: singular at z = +-i");
  return complex_ln(num / den) / (2.0 * i);
}

Paravector PolarForm::reconstruct() const {
  const int n = static_cast<int>(unit.size());
  if (!defined) return Paravector(n);
  const cdouble c = amplitude * std::cos(phase);
  const cdouble s = amplitude * std::sin(phase);
  std::vector<cdouble> v(unit.size());
  for (std::size_t j = 0; j < v.size(); ++j) v[j] = s * unit[j];
  return Paravector(c, std::move(v));
}

PolarForm polar_decompose(const Paravector& p, double eps) {
  PolarForm out;
  out.unit.assign(static_cast<std::size_t>(p.dim()), cdouble{});
  cdouble vsq{};
  for (const auto& y : p.vec()) vsq += y * y;
  const cdouble y0 = p.scalar();
  const cdouble vnorm = complex_sqrt(vsq);
  cdouble amp = complex_sqrt(y0 * y0 + vsq);
  if (std::abs(amp) <= eps || std::abs(vnorm) <= eps || amp == cdouble{} || vnorm == cdouble{}) {
    return out;
  }
  const cdouble theta = (y0 == cdouble{}) ? cdouble(std::numbers::pi / 2.0) : complex_arctan(vnorm / y0);
  // The principal arctan can land a half-turn away from the angle with
  // cos = y0/A; the opposite root of A absorbs it.
  const cdouble c = std::cos(theta);
  if (std::abs(amp * c - y0) > std::abs(amp * c + y0)) amp = -amp;
  out.defined = true;
  out.amplitude = amp;
  out.phase = theta;
  for (int j = 0; j < p.dim(); ++j) out.unit[static_cast<std::size_t>(j)] = p.vec(j) / vnorm;
  return out;
}

}  // namespace monolct
