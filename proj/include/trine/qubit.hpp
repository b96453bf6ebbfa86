// Copyright 2026 The Trine Discrimination Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Fixed-size 2x2 complex linear algebra for qubit states and POVM elements.
 *
 * Everything here is closed form: eigenvalues come from the characteristic
 * quadratic, inverses from the adjugate. Operators are always stored as full
 * complex matrices; the Bloch decomposition A = (a*1 + b.sigma)/2 is a view.
 */

#pragma once

#include <array>
#include <complex>
#include <span>
#include <utility>

namespace trine {

using Complex = std::complex<double>;

/// PSD and completeness tolerance used throughout.
inline constexpr double kPsdTolerance = 1e-10;
/// Tr(rho^2) must stay this far below one for rho to be invertible.
inline constexpr double kPurityTolerance = 1e-9;
/// Allowed deviation from Hermiticity when wrapping a general matrix.
inline constexpr double kHermiticityTolerance = 1e-12;
/// Allowed deviation of |amp_0|^2 + |amp_1|^2 from one.
inline constexpr double kNormTolerance = 1e-12;

struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  [[nodiscard]] double norm() const;
};

class PureState;

/// General 2x2 complex matrix, row major.
class Matrix2 {
 public:
  constexpr Matrix2() = default;
  constexpr Matrix2(Complex a00, Complex a01, Complex a10, Complex a11)
      : entries_{a00, a01, a10, a11} {}

  static Matrix2 identity() { return {1.0, 0.0, 0.0, 1.0}; }

  [[nodiscard]] Complex operator()(int row, int col) const { return entries_[2 * row + col]; }
  Complex& operator()(int row, int col) { return entries_[2 * row + col]; }

  [[nodiscard]] Matrix2 adjoint() const;
  [[nodiscard]] Matrix2 conjugate() const;
  [[nodiscard]] Complex trace() const { return entries_[0] + entries_[3]; }
  [[nodiscard]] Complex determinant() const;
  /// Largest singular value.
  [[nodiscard]] double operator_norm() const;
  /// Largest elementwise modulus of (this - other).
  [[nodiscard]] double max_abs_diff(const Matrix2& other) const;

  Matrix2& operator+=(const Matrix2& rhs);
  Matrix2& operator-=(const Matrix2& rhs);
  Matrix2& operator*=(Complex s);

  friend Matrix2 operator+(Matrix2 lhs, const Matrix2& rhs) { return lhs += rhs; }
  friend Matrix2 operator-(Matrix2 lhs, const Matrix2& rhs) { return lhs -= rhs; }
  friend Matrix2 operator*(Matrix2 m, Complex s) { return m *= s; }
  friend Matrix2 operator*(Complex s, Matrix2 m) { return m *= s; }
  friend Matrix2 operator*(const Matrix2& a, const Matrix2& b);

 private:
  std::array<Complex, 4> entries_{};
};

struct EigenPair2;

/// Hermitian 2x2 operator. Construction from a general matrix checks
/// Hermiticity and then symmetrizes, so the stored entries are exactly
/// Hermitian.
class HermitianMatrix2 {
 public:
  HermitianMatrix2() = default;
  /// Throws InvalidInputError when |m - m^dagger| exceeds `tol` elementwise.
  explicit HermitianMatrix2(const Matrix2& m, double tol = kHermiticityTolerance);
  HermitianMatrix2(double a00, Complex a01, double a11);

  static HermitianMatrix2 identity() { return {1.0, 0.0, 1.0}; }
  static HermitianMatrix2 zero() { return {0.0, 0.0, 0.0}; }
  /// (trace_part * 1 + b.sigma) / 2
  static HermitianMatrix2 from_bloch(double trace_part, const BlochVector& b);
  /// Hermitian part (m + m^dagger)/2 of an arbitrary matrix.
  static HermitianMatrix2 hermitian_part(const Matrix2& m);

  [[nodiscard]] const Matrix2& matrix() const { return m_; }
  [[nodiscard]] Complex operator()(int row, int col) const { return m_(row, col); }
  [[nodiscard]] double trace() const { return m_(0, 0).real() + m_(1, 1).real(); }
  [[nodiscard]] double determinant() const;
  /// Ascending pair (lower, upper).
  [[nodiscard]] std::pair<double, double> eigenvalues() const;
  [[nodiscard]] double min_eigenvalue() const { return eigenvalues().first; }
  [[nodiscard]] double max_eigenvalue() const { return eigenvalues().second; }
  /// b in this = (Tr * 1 + b.sigma) / 2.
  [[nodiscard]] BlochVector bloch() const;
  /// Tr(this * other), real for two Hermitian operators.
  [[nodiscard]] double trace_product(const HermitianMatrix2& other) const;
  /// <v| this |v>
  [[nodiscard]] double expectation(const PureState& v) const;
  [[nodiscard]] HermitianMatrix2 conjugate() const;

  HermitianMatrix2& operator+=(const HermitianMatrix2& rhs);
  HermitianMatrix2& operator-=(const HermitianMatrix2& rhs);
  HermitianMatrix2& operator*=(double s);

  friend HermitianMatrix2 operator+(HermitianMatrix2 lhs, const HermitianMatrix2& rhs) { return lhs += rhs; }
  friend HermitianMatrix2 operator-(HermitianMatrix2 lhs, const HermitianMatrix2& rhs) { return lhs -= rhs; }
  friend HermitianMatrix2 operator*(HermitianMatrix2 m, double s) { return m *= s; }
  friend HermitianMatrix2 operator*(double s, HermitianMatrix2 m) { return m *= s; }
  friend Matrix2 operator*(const HermitianMatrix2& a, const HermitianMatrix2& b) { return a.m_ * b.m_; }

 private:
  Matrix2 m_{};
};

/// Normalized qubit ket.
class PureState {
 public:
  PureState() : amps_{1.0, 0.0} {}
  /// Throws InvalidInputError unless |a0|^2 + |a1|^2 = 1 within kNormTolerance.
  PureState(Complex a0, Complex a1);
  /// Rescales a nonzero vector to unit norm.
  static PureState normalized(Complex a0, Complex a1);

  [[nodiscard]] Complex operator[](int i) const { return amps_[i]; }
  /// <this|other>
  [[nodiscard]] Complex inner(const PureState& other) const;
  [[nodiscard]] PureState orthogonal() const;
  [[nodiscard]] HermitianMatrix2 projector() const;
  [[nodiscard]] BlochVector bloch() const { return projector().bloch(); }

 private:
  std::array<Complex, 2> amps_;
};

/// Eigenvalues in ascending order with unit eigenvectors. Each eigenvector's
/// first nonzero component is real and positive.
struct EigenPair2 {
  double lower = 0.0;
  double upper = 0.0;
  PureState lower_vector;
  PureState upper_vector;
};

struct PovmValidity {
  bool is_valid = false;
  double min_element_eigenvalue = 0.0;
  /// Operator-norm distance of the element sum from the identity.
  double completeness_deviation = 0.0;
};

/// (|0> + e^{i phi}|1>)/sqrt(2), the equator point at azimuth phi.
PureState pure_state_from_equator_angle(double phi);

/// Tr(rho * element). Values within kPsdTolerance outside [0, 1] are clamped.
/// Throws InvalidInputError when rho is not a density matrix or the element
/// is not PSD.
double born_probability(const HermitianMatrix2& state, const HermitianMatrix2& element);

PovmValidity validate_povm(std::span<const HermitianMatrix2> elements, double tol = kPsdTolerance);

double min_eigenvalue(const HermitianMatrix2& m);
/// Throws InvalidInputError for non-Hermitian input.
double min_eigenvalue(const Matrix2& m);

EigenPair2 eigensystem(const HermitianMatrix2& m);

/// Throws InvalidInputError unless trace is one and the operator is PSD.
void require_density_matrix(const HermitianMatrix2& rho, double tol = kPsdTolerance);

double purity(const HermitianMatrix2& rho);

/// [1 - Tr(rho^2)]^{-1} (1 - b.sigma) for rho = (1 + b.sigma)/2.
HermitianMatrix2 antipodal_inverse(const HermitianMatrix2& rho);

/// Exact inverse of a mixed density matrix, cross-checked against the
/// antipodal form. Throws PureStateError when Tr(rho^2) >= 1 - kPurityTolerance.
HermitianMatrix2 invert_qubit_density(const HermitianMatrix2& rho);

}  // namespace trine
