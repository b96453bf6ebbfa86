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

#include "trine/qubit.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "trine/errors.hpp"

namespace trine {

namespace {

// Rotates v so that its first non-negligible component is real positive.
PureState fix_phase(Complex v0, Complex v1) {
  const Complex lead = std::abs(v0) > 1e-14 ? v0 : v1;
  const Complex rot = std::conj(lead) / std::abs(lead);
  return PureState::normalized(v0 * rot, v1 * rot);
}

}  // namespace

double BlochVector::norm() const { return std::sqrt(x * x + y * y + z * z); }

// ---------------------------------------------------------------- Matrix2

Matrix2 Matrix2::adjoint() const {
  return {std::conj(entries_[0]), std::conj(entries_[2]), std::conj(entries_[1]),
          std::conj(entries_[3])};
}

Matrix2 Matrix2::conjugate() const {
  return {std::conj(entries_[0]), std::conj(entries_[1]), std::conj(entries_[2]),
          std::conj(entries_[3])};
}

Complex Matrix2::determinant() const { return entries_[0] * entries_[3] - entries_[1] * entries_[2]; }

double Matrix2::operator_norm() const {
  const auto gram = HermitianMatrix2::hermitian_part(adjoint() * *this);
  return std::sqrt(std::max(0.0, gram.max_eigenvalue()));
}

double Matrix2::max_abs_diff(const Matrix2& other) const {
  double worst = 0.0;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    worst = std::max(worst, std::abs(entries_[i] - other.entries_[i]));
  }
  return worst;
}

Matrix2& Matrix2::operator+=(const Matrix2& rhs) {
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += rhs.entries_[i];
  return *this;
}

Matrix2& Matrix2::operator-=(const Matrix2& rhs) {
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= rhs.entries_[i];
  return *this;
}

Matrix2& Matrix2::operator*=(Complex s) {
  for (auto& e : entries_) e *= s;
  return *this;
}

Matrix2 operator*(const Matrix2& a, const Matrix2& b) {
  return {a(0, 0) * b(0, 0) + a(0, 1) * b(1, 0), a(0, 0) * b(0, 1) + a(0, 1) * b(1, 1),
          a(1, 0) * b(0, 0) + a(1, 1) * b(1, 0), a(1, 0) * b(0, 1) + a(1, 1) * b(1, 1)};
}

// ------------------------------------------------------- HermitianMatrix2

HermitianMatrix2::HermitianMatrix2(const Matrix2& m, double tol) {
  const double skew = m.max_abs_diff(m.adjoint());
  if (!(skew <= tol)) {
    throw InvalidInputError("matrix is not Hermitian (deviation " + std::to_string(skew) + ")");
  }
  m_ = hermitian_part(m).m_;
}

HermitianMatrix2::HermitianMatrix2(double a00, Complex a01, double a11)
    : m_(a00, a01, std::conj(a01), a11) {}

HermitianMatrix2 HermitianMatrix2::from_bloch(double trace_part, const BlochVector& b) {
  return {0.5 * (trace_part + b.z), 0.5 * Complex(b.x, -b.y), 0.5 * (trace_part - b.z)};
}

HermitianMatrix2 HermitianMatrix2::hermitian_part(const Matrix2& m) {
  return {m(0, 0).real(), 0.5 * (m(0, 1) + std::conj(m(1, 0))), m(1, 1).real()};
}

double HermitianMatrix2::determinant() const {
  return m_(0, 0).real() * m_(1, 1).real() - std::norm(m_(0, 1));
}

std::pair<double, double> HermitianMatrix2::eigenvalues() const {
  const double a = m_(0, 0).real();
  const double d = m_(1, 1).real();
  const double mean = 0.5 * (a + d);
  const double radius = std::hypot(0.5 * (a - d), std::abs(m_(0, 1)));
  return {mean - radius, mean + radius};
}

BlochVector HermitianMatrix2::bloch() const {
  const Complex off = m_(0, 1);
  return {2.0 * off.real(), -2.0 * off.imag(), m_(0, 0).real() - m_(1, 1).real()};
}

double HermitianMatrix2::trace_product(const HermitianMatrix2& other) const {
  return (m_ * other.m_).trace().real();
}

double HermitianMatrix2::expectation(const PureState& v) const {
  const Complex w0 = m_(0, 0) * v[0] + m_(0, 1) * v[1];
  const Complex w1 = m_(1, 0) * v[0] + m_(1, 1) * v[1];
  return (std::conj(v[0]) * w0 + std::conj(v[1]) * w1).real();
}

HermitianMatrix2 HermitianMatrix2::conjugate() const {
  return {m_(0, 0).real(), std::conj(m_(0, 1)), m_(1, 1).real()};
}

HermitianMatrix2& HermitianMatrix2::operator+=(const HermitianMatrix2& rhs) {
  m_ += rhs.m_;
  return *this;
}

HermitianMatrix2& HermitianMatrix2::operator-=(const HermitianMatrix2& rhs) {
  m_ -= rhs.m_;
  return *this;
}

HermitianMatrix2& HermitianMatrix2::operator*=(double s) {
  m_ *= s;
  return *this;
}

// -------------------------------------------------------------- PureState

PureState::PureState(Complex a0, Complex a1) : amps_{a0, a1} {
  const double n = std::norm(a0) + std::norm(a1);
  if (!(std::abs(n - 1.0) <= kNormTolerance)) {
    throw InvalidInputError("state is not normalized (norm^2 = " + std::to_string(n) + ")");
  }
}

PureState PureState::normalized(Complex a0, Complex a1) {
  const double n = std::sqrt(std::norm(a0) + std::norm(a1));
  if (!(n > 0.0) || !std::isfinite(n)) throw InvalidInputError("cannot normalize a zero vector");
  return {a0 / n, a1 / n};
}

Complex PureState::inner(const PureState& other) const {
  return std::conj(amps_[0]) * other.amps_[0] + std::conj(amps_[1]) * other.amps_[1];
}

PureState PureState::orthogonal() const { return {-std::conj(amps_[1]), std::conj(amps_[0])}; }

HermitianMatrix2 PureState::projector() const {
  return {std::norm(amps_[0]), amps_[0] * std::conj(amps_[1]), std::norm(amps_[1])};
}

// ------------------------------------------------------------- operations

PureState pure_state_from_equator_angle(double phi) {
  const double s = 1.0 / std::sqrt(2.0);
  return {s, std::polar(s, phi)};
}

void require_density_matrix(const HermitianMatrix2& rho, double tol) {
  if (!(std::abs(rho.trace() - 1.0) <= tol)) {
    throw InvalidInputError("density matrix must have unit trace (trace " + std::to_string(rho.trace()) +
                            ")");
  }
  if (!(rho.min_eigenvalue() >= -tol)) {
    throw InvalidInputError("density matrix is not positive semi-definite");
  }
}

double born_probability(const HermitianMatrix2& state, const HermitianMatrix2& element) {
  require_density_matrix(state);
  if (!(element.min_eigenvalue() >= -kPsdTolerance)) {
    throw InvalidInputError("POVM element is not positive semi-definite");
  }
  const double value = state.trace_product(element);
  if (value < 0.0) {
    if (value < -kPsdTolerance) throw InvalidInputError("negative Born probability");
    return 0.0;
  }
  if (value > 1.0 && value <= 1.0 + kPsdTolerance) return 1.0;
  return value;
}

PovmValidity validate_povm(std::span<const HermitianMatrix2> elements, double tol) {
  PovmValidity out;
  if (elements.empty()) throw InvalidInputError("a POVM needs at least one element");
  HermitianMatrix2 sum = HermitianMatrix2::zero();
  out.min_element_eigenvalue = elements.front().min_eigenvalue();
  for (const auto& e : elements) {
    out.min_element_eigenvalue = std::min(out.min_element_eigenvalue, e.min_eigenvalue());
    sum += e;
  }
  const auto [lo, hi] = (sum - HermitianMatrix2::identity()).eigenvalues();
  out.completeness_deviation = std::max(std::abs(lo), std::abs(hi));
  out.is_valid = out.min_element_eigenvalue >= -tol && out.completeness_deviation <= tol;
  return out;
}

double min_eigenvalue(const HermitianMatrix2& m) { return m.min_eigenvalue(); }

double min_eigenvalue(const Matrix2& m) { return HermitianMatrix2(m).min_eigenvalue(); }

EigenPair2 eigensystem(const HermitianMatrix2& m) {
  const auto [lo, hi] = m.eigenvalues();
  const double a = m(0, 0).real();
  const double d = m(1, 1).real();
  const Complex c = m(0, 1);

  // Two null-space candidates of (m - hi); the larger one is the stable pick.
  const Complex u0 = c;
  const Complex u1 = hi - a;
  const Complex w0 = hi - d;
  const Complex w1 = std::conj(c);
  const double nu = std::norm(u0) + std::norm(u1);
  const double nw = std::norm(w0) + std::norm(w1);

  EigenPair2 out;
  out.lower = lo;
  out.upper = hi;
  if (std::max(nu, nw) <= 1e-300) {
    // Scalar multiple of the identity: any basis diagonalizes it.
    out.upper_vector = PureState(1.0, 0.0);
    out.lower_vector = PureState(0.0, 1.0);
    return out;
  }
  const PureState up = nu >= nw ? PureState::normalized(u0, u1) : PureState::normalized(w0, w1);
  const PureState down = up.orthogonal();
  out.upper_vector = fix_phase(up[0], up[1]);
  out.lower_vector = fix_phase(down[0], down[1]);
  return out;
}

double purity(const HermitianMatrix2& rho) {
  return std::norm(rho(0, 0)) + std::norm(rho(1, 1)) + 2.0 * std::norm(rho(0, 1));
}

HermitianMatrix2 antipodal_inverse(const HermitianMatrix2& rho) {
  const BlochVector b = rho.bloch();
  const double mixedness = 1.0 - purity(rho);
  if (!(mixedness > 0.0)) throw PureStateError("density matrix is pure; it has no inverse");
  return HermitianMatrix2::from_bloch(2.0, {-2.0 * b.x, -2.0 * b.y, -2.0 * b.z}) * (1.0 / mixedness);
}

HermitianMatrix2 invert_qubit_density(const HermitianMatrix2& rho) {
  require_density_matrix(rho);
  const double p = purity(rho);
  if (!(p < 1.0 - kPurityTolerance)) {
    throw PureStateError("density matrix is pure (Tr rho^2 = " + std::to_string(p) + "); it has no inverse");
  }
  const double det = rho.determinant();
  const HermitianMatrix2 direct =
      HermitianMatrix2(rho(1, 1).real(), -rho(0, 1), rho(0, 0).real()) * (1.0 / det);
  const HermitianMatrix2 antipodal = antipodal_inverse(rho);
  const double scale = std::max(1.0, direct.max_eigenvalue());
  if (!(direct.matrix().max_abs_diff(antipodal.matrix()) <= 1e-10 * scale)) {
    throw VerificationError("direct and antipodal inverses disagree");
  }
  return direct;
}

}  // namespace trine
