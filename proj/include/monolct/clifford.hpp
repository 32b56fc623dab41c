// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The monolct Authors

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace monolct {

using cdouble = std::complex<double>;

/// Complex Clifford number in C^(n), n in 1..3, with e_i e_j + e_j e_i = -2 delta_ij.
///
/// Coefficients are stored in grade-then-lexicographic basis order:
/// n = 3 gives (1, e1, e2, e3, e12, e13, e23, e123). That order is also the
/// debug serialization order.
class CliffordNum {
 public:
  static constexpr int kMaxDim = 3;

  explicit CliffordNum(int n);
  CliffordNum(int n, std::vector<cdouble> coeffs);

  static CliffordNum scalar(int n, cdouble s);
  /// e_j for j in 1..n.
  static CliffordNum basis_vector(int n, int j);

  int dim() const { return n_; }
  std::size_t size() const { return coeffs_.size(); }
  std::span<const cdouble> coeffs() const { return coeffs_; }

  cdouble operator[](std::size_t k) const { return coeffs_[k]; }
  cdouble& operator[](std::size_t k) { return coeffs_[k]; }

  /// Grade of basis element k (number of generators in e_S).
  static int grade_of(int n, std::size_t k);
  /// "e0" for the scalar, otherwise e.g. "e13".
  static std::string basis_name(int n, std::size_t k);
  /// Bitmask of generators in basis element k (bit j-1 set for e_j).
  static unsigned blade_mask(int n, std::size_t k);
  static std::size_t index_of_mask(int n, unsigned mask);

  CliffordNum grade(int g) const;
  cdouble scalar_part() const { return coeffs_[0]; }
  std::vector<cdouble> vector_part() const;
  /// Inner-product norm (sum_S |x_S|^2)^(1/2).
  double norm() const;

  CliffordNum& operator+=(const CliffordNum& o);
  CliffordNum& operator-=(const CliffordNum& o);
  CliffordNum& operator*=(cdouble s);

  friend CliffordNum operator+(CliffordNum x, const CliffordNum& y) { return x += y; }
  friend CliffordNum operator-(CliffordNum x, const CliffordNum& y) { return x -= y; }
  friend CliffordNum operator*(CliffordNum x, cdouble s) { return x *= s; }
  friend CliffordNum operator*(cdouble s, CliffordNum x) { return x *= s; }
  friend CliffordNum operator*(const CliffordNum& x, const CliffordNum& y);

 private:
  int n_;
  std::vector<cdouble> coeffs_;
};

/// Associative product of two elements of the same algebra.
CliffordNum geometric_product(const CliffordNum& x, const CliffordNum& y);

struct GradeParts {
  cdouble scalar;
  std::vector<cdouble> vector;
  CliffordNum rest;  // grades >= 2
};

GradeParts grade_parts(const CliffordNum& x);

/// `(re+imi)*eS` terms joined by " + " in basis order, full precision.
std::string to_string(const CliffordNum& x);

/// Scalar + vector element y0 + y1 e1 + ... + yn en (the set C_v).
class Paravector {
 public:
  explicit Paravector(int n) : s_(0.0), v_(static_cast<std::size_t>(n)) {}
  Paravector(cdouble s, std::vector<cdouble> v) : s_(s), v_(std::move(v)) {}

  /// Throws if x carries grade >= 2 content above `tol` (absolute).
  static Paravector from_clifford(const CliffordNum& x, double tol = 0.0);

  int dim() const { return static_cast<int>(v_.size()); }
  cdouble scalar() const { return s_; }
  std::span<const cdouble> vec() const { return v_; }
  cdouble vec(int j) const { return v_[static_cast<std::size_t>(j)]; }

  Paravector conj() const;
  CliffordNum to_clifford() const;

 private:
  cdouble s_;
  std::vector<cdouble> v_;
};

/// Principal root |z|^(1/2) e^(i arg z / 2), arg z in (-pi, pi].
cdouble complex_sqrt(cdouble z);
/// Principal log ln|z| + i arg z, arg z in (-pi, pi].
cdouble complex_ln(cdouble z);
/// (1/2i) ln((1 + iz)/(1 - iz)) with the principal log. Throws std::domain_error at z = +-i.
cdouble complex_arctan(cdouble z);

/// y = A (cos theta + I sin theta) with complex A, theta and a complex unit vector I.
struct PolarForm {
  bool defined = false;
  cdouble amplitude{};
  cdouble phase{};
  std::vector<cdouble> unit;

  /// A cos(theta) + A sin(theta) I; zero paravector when undefined.
  Paravector reconstruct() const;
};

/// Complex polar decomposition of a paravector.
///
/// theta is the principal arctan of sqrt(y1^2+..+yn^2)/y0 (pi/2 when y0 == 0).
/// A is the complex root of y0^2+..+yn^2 whose sign makes A cos(theta) == y0,
/// so the decomposition always reconstructs p. The result is flagged
/// undefined when either pseudo-norm has modulus <= eps.
PolarForm polar_decompose(const Paravector& p, double eps = 0.0);

}  // namespace monolct
